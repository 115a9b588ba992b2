/**
 * @file clifford.cpp
 * @brief Irr(P_n) by Clifford theory over U_n, the psi operators and their checks.
 */
#include "orthochar/clifford.hpp"

#include <stdexcept>

namespace orthochar {

namespace {

Rational qpow(int q, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

std::string rs(const Rational& r) { return rational_to_string(r); }

int ti(PType t) { return static_cast<int>(t); }

bool is_trivial(const ClassFunction& chi) { return chi == ClassFunction::trivial(chi.group()); }

std::string z_string(const std::array<Cyclotomic, 3>& v) {
  return v[0].str() + "," + v[1].str() + "," + v[2].str();
}

}  // namespace

std::string ptype_symbol(PType t) {
  switch (t) {
    case PType::One: return "1";
    case PType::Zero: return "0";
    case PType::Plus: return "+";
    default: return "-";
  }
}

int ptype_eps(PType t) {
  switch (t) {
    case PType::Zero: return 0;
    case PType::Plus: return 1;
    case PType::Minus: return -1;
    default: throw std::invalid_argument("Type 1 has no eps");
  }
}

// ---------------------------------------------------------------------------
// Construction

const CliffordContext& CliffordContext::of(const OrthoContext& ctx) {
  static std::recursive_mutex mu;
  static std::map<const OrthoContext*, std::unique_ptr<CliffordContext>> registry;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = registry.find(&ctx);
  if (it != registry.end()) return *it->second;
  std::unique_ptr<CliffordContext> c(new CliffordContext(ctx));
  return *registry.emplace(&ctx, std::move(c)).first->second;
}

CliffordContext::CliffordContext(const OrthoContext& ctx) : ctx_(&ctx) {
  if (ctx.n() < 3) throw std::invalid_argument("Irr(P_n) needs n >= 3");
  if (!ctx.p_enumerable()) throw std::invalid_argument("P is too large to enumerate at " + ctx.tag());
  build_payloads();
  for (PType t : kPTypes) {
    if (!has_type(t)) continue;
    for (size_t i = 0; i < payload_irr_[ti(t)].size(); ++i) {
      IrrPEntry e;
      e.label = IrrPLabel{t, static_cast<int>(i), ptype_symbol(t) + "psi[" + payload_names_[ti(t)][i] + "]"};
      e.chi = psi(t, payload_irr_[ti(t)][i]);
      irr_index_[{ti(t), static_cast<int>(i)}] = static_cast<int>(irr_.size());
      irr_.push_back(std::move(e));
    }
  }
}

void CliffordContext::build_payloads() {
  const OrthoContext& ctx = *ctx_;
  const int q = ctx.q();

  const auto& cu = UnipotentCharacters::of(*ctx.child());
  const CharacterTable& ct = cu.table();
  payload_groups_[ti(PType::One)] = &ctx.L();
  for (size_t i = 0; i < ct.size(); ++i)
    for (int k = 0; k < q - 1; ++k) {
      payload_irr_[ti(PType::One)].push_back(levi_character(ctx, ct[i], k));
      auto l = cu.label_of(static_cast<int>(i));
      std::string name = l ? l->str() : "chi" + std::to_string(i);
      if (k > 0) name += "*alpha^" + std::to_string(k);
      payload_names_[ti(PType::One)].push_back(name);
    }

  if (ctx.n() >= 5) {
    const CliffordContext& cc = of(*ctx.child());
    payload_groups_[ti(PType::Zero)] = &ctx.child()->P();
    for (const auto& e : cc.irr()) {
      payload_irr_[ti(PType::Zero)].push_back(e.chi);
      payload_names_[ti(PType::Zero)].push_back(e.label.name);
    }
  }

  for (int eps : {1, -1}) {
    if (eps < 0 && ctx.n() < 5) continue;
    PType t = eps > 0 ? PType::Plus : PType::Minus;
    const FiniteMatrixGroup& l = ctx.Lpm(eps);
    payload_groups_[ti(t)] = &l;
    CharacterTable tab = character_table(l);
    for (size_t i = 0; i < tab.size(); ++i) {
      payload_irr_[ti(t)].push_back(tab[i]);
      payload_names_[ti(t)].push_back(is_trivial(tab[i]) ? "1" : "theta" + std::to_string(i));
    }
  }
  if (ctx.n() == 5) name_lpm_n5();
}

void CliffordContext::name_lpm_n5() {
  const OrthoContext& ctx = *ctx_;
  const ClassFunction st = steinberg_l();
  for (int eps : {1, -1}) {
    PType t = eps > 0 ? PType::Plus : PType::Minus;
    const FiniteMatrixGroup& l = ctx.Lpm(eps);
    const FiniteMatrixGroup& k = ctx.Kpm(eps);
    const ClassFunction st_res = restrict_to(st, l);
    auto& irr = payload_irr_[ti(t)];
    auto& names = payload_names_[ti(t)];
    int nu1 = 0, xi = 0;
    std::vector<int> outside;
    for (size_t i = 0; i < irr.size(); ++i) {
      if (irr[i].degree() == 1) {
        if (is_trivial(irr[i])) continue;
        if (is_trivial(restrict_to(irr[i], k))) {
          names[i] = "nu1";
          ++nu1;
        } else {
          outside.push_back(static_cast<int>(i));
        }
      } else if (irr[i].degree() == 2) {
        names[i] = "Xi" + std::to_string(++xi);
      } else {
        throw std::logic_error("L^pm has an irreducible of degree " + rs(irr[i].degree()));
      }
    }
    if (nu1 != 1) throw std::logic_error("expected one nontrivial linear character with K in its kernel");
    if (outside.empty()) continue;
    if (outside.size() != 2) throw std::logic_error("expected two linear characters with K not in the kernel");
    std::vector<int> in_st;
    for (int i : outside)
      if (inner_product(st_res, irr[i]) != 0) in_st.push_back(i);
    if (in_st.size() != 1) throw std::logic_error("St_L restricted to L^pm does not single out nu3");
    for (int i : outside) names[i] = i == in_st[0] ? "nu3" : "nu2";
  }
}

bool CliffordContext::has_type(PType t) const {
  if (ctx_->n() >= 5) return true;
  return t == PType::One || t == PType::Plus;
}

const FiniteMatrixGroup& CliffordContext::payload_group(PType t) const {
  if (!has_type(t)) throw std::invalid_argument("Type " + ptype_symbol(t) + " does not occur at " + ctx_->tag());
  return *payload_groups_[ti(t)];
}

const std::vector<ClassFunction>& CliffordContext::payload_irr(PType t) const { return payload_irr_[ti(t)]; }

const std::vector<std::string>& CliffordContext::payload_names(PType t) const { return payload_names_[ti(t)]; }

int CliffordContext::payload_index(PType t, const std::string& name) const {
  const auto& names = payload_names_[ti(t)];
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("no Type " + ptype_symbol(t) + " payload named '" + name + "' at " + ctx_->tag());
}

ClassFunction CliffordContext::payload_sum(PType t, const std::vector<std::string>& names) const {
  ClassFunction r = ClassFunction::zero(&payload_group(t));
  for (const auto& nm : names) r += payload_irr_[ti(t)][payload_index(t, nm)];
  return r;
}

int CliffordContext::irr_index(PType t, int payload) const {
  auto it = irr_index_.find({ti(t), payload});
  if (it == irr_index_.end()) throw std::invalid_argument("no such irreducible of P");
  return it->second;
}

const std::vector<int>& CliffordContext::fusion_to_p(int eps) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = fusion_.find(eps);
  if (it != fusion_.end()) return it->second;
  return fusion_[eps] = class_fusion(ctx_->inertia(eps), ctx_->P());
}

// ---------------------------------------------------------------------------
// psi operators

ClassFunction CliffordContext::psi1(const ClassFunction& sigma) const {
  const OrthoContext& ctx = *ctx_;
  return ClassFunction::from_rep_map(&ctx.P(), [&](const Mat& g) { return sigma.at(ctx.levi(g)); });
}

ClassFunction CliffordContext::psi0(const ClassFunction& mu) const {
  const OrthoContext& ctx = *ctx_;
  if (ctx.n() < 5) throw std::invalid_argument("Type 0 needs n >= 5");
  const FiniteMatrixGroup& i0 = ctx.inertia(0);
  ClassFunction f = ClassFunction::from_rep_map(&i0, [&](const Mat& g) {
    return ctx.lambda(0, ctx.u_vector(g)) * mu.at(ctx.mid(g));
  });
  return induce(f, ctx.P(), fusion_to_p(0));
}

ClassFunction CliffordContext::psi_pm(int eps, const ClassFunction& theta) const {
  const OrthoContext& ctx = *ctx_;
  const FiniteMatrixGroup& ie = ctx.inertia(eps);
  ClassFunction f = ClassFunction::from_rep_map(&ie, [&](const Mat& g) {
    return ctx.lambda(eps, ctx.u_vector(g)) * theta.at(ctx.levi(g));
  });
  return induce(f, ctx.P(), fusion_to_p(eps));
}

ClassFunction CliffordContext::psi(PType t, const ClassFunction& payload) const {
  switch (t) {
    case PType::One: return psi1(payload);
    case PType::Zero: return psi0(payload);
    default: return psi_pm(ptype_eps(t), payload);
  }
}

ClassFunction CliffordContext::unipotent_sigma(const UnipotentLabel& child_label) const {
  return levi_character(*ctx_, UnipotentCharacters::of(*ctx_->child()).character(child_label), 0);
}

ClassFunction CliffordContext::steinberg_l() const { return unipotent_sigma(steinberg_label(ctx_->m() - 1)); }

ComponentSplit CliffordContext::component_split(const ClassFunction& chi) const {
  ComponentSplit s;
  for (PType t : kPTypes) {
    s.parts[ti(t)] = ClassFunction::zero(&ctx_->P());
    if (has_type(t)) s.payloads[ti(t)] = ClassFunction::zero(payload_groups_[ti(t)]);
    s.degrees[ti(t)] = 0;
  }
  ClassFunction rest = chi;
  for (const auto& e : irr_) {
    Rational mult = inner_product(chi, e.chi);
    if (mult < 0 || mult.get_den() != 1) throw std::runtime_error("not a character of P: multiplicity " + rs(mult));
    s.multiplicities.push_back(static_cast<int>(mult.get_num().get_si()));
    if (mult == 0) continue;
    const int t = ti(e.label.type);
    const ClassFunction& pay = payload_irr_[t][e.label.payload];
    s.parts[t] += e.chi * mult;
    s.payloads[t] += pay * mult;
    s.degrees[t] += pay.degree() * mult;
    rest -= e.chi * mult;
  }
  if (!rest.is_zero()) throw std::runtime_error("class function is not in the span of Irr(P)");
  return s;
}

std::array<Cyclotomic, 3> CliffordContext::values_on_z(const ClassFunction& chi) const {
  return {chi.at(ctx_->z(0)), chi.at(ctx_->z(1)), chi.at(ctx_->z(2))};
}

nlohmann::json CliffordContext::irr_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : irr_) {
    nlohmann::json j{{"type", ptype_symbol(e.label.type)},
                     {"payload", payload_names_[ti(e.label.type)][e.label.payload]},
                     {"name", e.label.name},
                     {"degree", rs(e.chi.degree())},
                     {"values", e.chi.to_json()}};
    if (ctx_->n() >= 5) {
      auto z = values_on_z(e.chi);
      j["values_on_z"] = {z[0].str(), z[1].str(), z[2].str()};
    }
    out.push_back(j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Degrees from values

std::array<std::array<Rational, 4>, 4> values_matrix(int m, int q) {
  if (m < 2) throw std::invalid_argument("the values matrix needs m >= 2");
  const Rational a = qpow(q, m - 1), h = Rational(1, 2), qq = q;
  std::array<std::array<Rational, 4>, 4> mat;
  mat[0] = {1, a * a - 1, h * a * (a + 1) * (qq - 1), h * a * (a - 1) * (qq - 1)};
  mat[1] = {1, -1, h * a * (qq - 1), -h * a * (qq - 1)};
  if (q % 2) {
    mat[2] = {1, a - 1, -a, 0};
    mat[3] = {1, -(a + 1), 0, a};
  } else {
    mat[2] = {1, a * a - 1, -h * a * (a + 1), -h * a * (a - 1)};
    mat[3] = {1, -1, -h * a, h * a};
  }
  return mat;
}

Rational values_matrix_det_formula(int m, int q) {
  return q % 2 ? qpow(q, 4 * m - 2) : qpow(q, 5 * m - 3) / 2;
}

Rational values_matrix_det(int m, int q) {
  auto a = values_matrix(m, q);
  Rational det = 1;
  for (int c = 0; c < 4; ++c) {
    int piv = -1;
    for (int r = c; r < 4 && piv < 0; ++r)
      if (a[r][c] != 0) piv = r;
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < 4; ++r) {
      Rational f = a[r][c] / a[c][c];
      for (int k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

std::array<Rational, 4> degrees_from_values(const std::array<Rational, 4>& values, int m, int q) {
  if (values_matrix_det(m, q) != values_matrix_det_formula(m, q))
    throw std::logic_error("determinant of the values matrix differs from its closed form");
  auto a = values_matrix(m, q);
  std::array<Rational, 4> b = values;
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (int r = 0; r < 4; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (int k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::array<Rational, 4> x;
  for (int c = 0; c < 4; ++c) {
    x[c] = b[c] / a[c][c];
    if (x[c].get_den() != 1) throw std::domain_error("non-integral component degree " + rs(x[c]));
  }
  return x;
}

// ---------------------------------------------------------------------------
// Checks

namespace {

Rational formula_degree(const OrthoContext& ctx, PType t, const Rational& payload_degree) {
  const int q = ctx.q(), m = ctx.m();
  const Rational a = qpow(q, m - 1);
  switch (t) {
    case PType::One: return payload_degree;
    case PType::Zero: return (a * a - 1) * payload_degree;
    case PType::Plus: return a * (a + 1) * (q - 1) * payload_degree / 2;
    default: return a * (a - 1) * (q - 1) * payload_degree / 2;
  }
}

std::string degrees_string(const std::array<Rational, 4>& d) {
  return "(" + rs(d[0]) + "," + rs(d[1]) + "," + rs(d[2]) + "," + rs(d[3]) + ")";
}

}  // namespace

CheckList check_irr_parabolic(const OrthoContext& ctx) {
  CheckList out;
  const std::string p = ctx.tag();
  const auto& cc = CliffordContext::of(ctx);
  const FiniteMatrixGroup& pg = ctx.P();
  const auto& irr = cc.irr();
  out.push_back(make_check("|Irr(P)| = k(P)", p, std::to_string(pg.num_classes()), std::to_string(irr.size())));
  Rational sq = 0;
  for (const auto& e : irr) sq += e.chi.degree() * e.chi.degree();
  out.push_back(make_check("sum of squared degrees = |P|", p, std::to_string(pg.order()), rs(sq)));
  bool orth = true;
  std::string detail;
  for (size_t i = 0; i < irr.size() && orth; ++i)
    for (size_t j = i; j < irr.size() && orth; ++j) {
      Rational ip = inner_product(irr[i].chi, irr[j].chi);
      if (ip != (i == j ? 1 : 0)) {
        orth = false;
        detail = irr[i].label.name + " vs " + irr[j].label.name + " gives " + rs(ip);
      }
    }
  out.push_back(make_bool_check("Irr(P) is orthonormal", p, orth, detail));
  for (const auto& e : irr) {
    const Rational pd = cc.payload_irr(e.label.type)[e.label.payload].degree();
    out.push_back(make_check("degree of " + e.label.name, p, rs(formula_degree(ctx, e.label.type, pd)),
                             rs(e.chi.degree())));
  }
  if (ctx.n() == 5) {
    const int q = ctx.q();
    for (int eps : {1, -1}) {
      PType t = eps > 0 ? PType::Plus : PType::Minus;
      int lin = 0, two = 0;
      for (const auto& chi : cc.payload_irr(t)) (chi.degree() == 1 ? lin : two) += 1;
      const std::string s = eps > 0 ? "+" : "-";
      int exp_lin = q % 2 ? 4 : 2;
      int exp_two = q % 2 ? (q - eps) / 2 - 1 : (q - 1 - eps) / 2;
      out.push_back(make_check("linear characters of L^" + s, p, std::to_string(exp_lin), std::to_string(lin)));
      out.push_back(make_check("degree-2 characters of L^" + s, p, std::to_string(exp_two), std::to_string(two)));
    }
  }
  return out;
}

CheckList check_values_on_z(const OrthoContext& ctx) {
  CheckList out;
  const std::string p = ctx.tag();
  if (ctx.n() < 5) return out;
  const auto& cc = CliffordContext::of(ctx);
  const int m = ctx.m(), q = ctx.q();
  out.push_back(make_check("det M", p + ",m=" + std::to_string(m), rs(values_matrix_det_formula(m, q)),
                           rs(values_matrix_det(m, q))));
  const auto mat = values_matrix(m, q);
  for (const auto& e : cc.irr()) {
    const int col = ti(e.label.type);
    const Rational pd = cc.payload_irr(e.label.type)[e.label.payload].degree();
    std::array<Cyclotomic, 3> expected{Cyclotomic(mat[1][col] * pd), Cyclotomic(mat[2][col] * pd),
                                       Cyclotomic(mat[3][col] * pd)};
    out.push_back(make_check("values of " + e.label.name + " on z_0, z_1, z_2", p, z_string(expected),
                             z_string(cc.values_on_z(e.chi))));
  }
  return out;
}

CheckList check_component_degrees(const OrthoContext& ctx) {
  CheckList out;
  const std::string p = ctx.tag();
  const auto& cc = CliffordContext::of(ctx);
  const CharacterTable tab = character_table(ctx.G());
  const auto fusion = class_fusion(ctx.P(), ctx.G());
  for (size_t i = 0; i < tab.size(); ++i) {
    const ClassFunction& chi = tab[i];
    ComponentSplit s = cc.component_split(restrict_along(chi, ctx.P(), fusion));
    std::array<Rational, 4> vals{chi.degree(), chi.at(ctx.z(0)).rational(), chi.at(ctx.z(1)).rational(),
                                 chi.at(ctx.z(2)).rational()};
    std::string computed;
    try {
      computed = degrees_string(degrees_from_values(vals, ctx.m(), ctx.q()));
    } catch (const std::domain_error& e) {
      computed = e.what();
    }
    out.push_back(make_check("component degrees of Irr(G)[" + std::to_string(i) + "] from values on z", p,
                             degrees_string(s.degrees), computed));
  }
  return out;
}

namespace {

/** nu of P_{n-2} inflated to RQ_K, conjugated by s and induced to P. */
ClassFunction s_nu_induced(const OrthoContext& ctx, const ClassFunction& nu) {
  const FiniteMatrixGroup& rqk = ctx.RQK();
  ClassFunction infl = ClassFunction::from_rep_map(&rqk, [&](const Mat& g) { return nu.at(ctx.mid(g)); });
  return induce(conjugate(infl, rqk, ctx.s()), ctx.P());
}

}  // namespace

CheckList check_rqk_induction(const OrthoContext& ctx, const std::string& parts) {
  CheckList out;
  const std::string p = ctx.tag();
  if (ctx.m() < 2) throw std::invalid_argument("the theorem needs m >= 2");
  const auto& cc = CliffordContext::of(ctx);
  const auto& child = CliffordContext::of(*ctx.child());
  const OrthoContext& cctx = *ctx.child();
  const Field& f = ctx.field();
  const int n = ctx.n(), m = ctx.m(), q = ctx.q();
  const Mat s = ctx.s(), t = ctx.t();
  const FiniteMatrixGroup& pg = ctx.P();
  const Rational index = Rational(static_cast<long>(pg.order())) / static_cast<long>(ctx.RQK().order());

  if (parts.find('a') != std::string::npos) {
    const FiniteMatrixGroup& l = ctx.L();
    bool normal = true;
    for (const auto& g : l.elements())
      if (!l.contains(mat_conj(f, t, g))) normal = false;
    out.push_back(make_bool_check("(a) t normalizes L", p, normal));
    const auto& pays = cc.payload_irr(PType::One);
    for (size_t i = 0; i < pays.size(); ++i) {
      const ClassFunction& sigma = pays[i];
      if (restrict_to(sigma, ctx.A()) != ClassFunction::constant(&ctx.A(), Cyclotomic(sigma.degree()))) continue;
      const std::string nm = cc.payload_names(PType::One)[i];
      ClassFunction ts = conjugate(sigma, l, t);
      out.push_back(make_bool_check("(a) ^t sigma is irreducible on L, sigma = " + nm, p, is_irreducible(ts)));
      const ClassFunction infl = cc.psi1(sigma);
      ClassFunction via_p = ClassFunction::from_rep_map(&l, [&](const Mat& g) { return infl.at(mat_conj(f, t, g)); });
      out.push_back(make_bool_check("(a) ^t(Infl sigma) restricted to L equals ^t sigma, sigma = " + nm, p, via_p == ts));
    }
  }

  for (const auto& e : child.irr()) {
    const PType ty = e.label.type;
    const char part = ty == PType::One ? 'b' : ty == PType::Zero ? 'c' : ty == PType::Plus ? 'd' : 'e';
    if (parts.find(part) == std::string::npos) continue;
    const std::string claim = std::string("(") + part + ") nu = " + e.label.name;
    if ((part == 'c' || part == 'e') && m < 3) {
      out.push_back(make_skipped(claim, p, "needs m >= 3"));
      continue;
    }
    const ClassFunction& nu = e.chi;
    const ClassFunction& pay = child.payload_irr(ty)[e.label.payload];
    ClassFunction lhs = s_nu_induced(ctx, nu);
    ClassFunction rhs;
    if (part == 'b') {
      const FiniteMatrixGroup& qk = ctx.QK();
      ClassFunction on_qk = ClassFunction::from_rep_map(&qk, [&](const Mat& g) {
        Mat lk = ctx.s_elem(cctx.levi(ctx.mid(g)), g(0, 0));
        return nu.at(ctx.mid(mat_conj(f, s, lk)));
      });
      ClassFunction sigma = induce(on_qk, ctx.L());
      rhs = cc.psi0(nu) + cc.psi1(sigma);
    } else if (part == 'c') {
      const OrthoContext& gctx = *cctx.child();
      const Mat r = cctx.s();
      if (ctx.r() != ctx.s_elem(r, 1)) throw std::logic_error("r does not restrict to s_{m-1} of P_{n-2}");
      const FiniteMatrixGroup& cp = cctx.P();
      GroupPtr h = subgroup_by_predicate(cp, [&](const Mat& g) { return cp.contains(mat_conj(f, r, g)); });
      ClassFunction infl = ClassFunction::from_rep_map(h.get(), [&](const Mat& g) {
        return pay.at(mat_block(g, 1, gctx.n()));
      });
      ClassFunction sigma = induce(conjugate(infl, *h, r), cp);
      rhs = cc.psi0(sigma);
      Rational expected = Rational(q) * (qpow(q, 2 * m - 2) - 1) * (qpow(q, 2 * m - 4) - 1) / (q - 1) * pay.degree();
      out.push_back(make_check(claim + ": degree", p, rs(expected), rs(lhs.degree())));
    } else if (part == 'd') {
      const FiniteMatrixGroup& pm3 = ctx.Pm3(1);
      ClassFunction infl = ClassFunction::from_rep_map(&pm3, [&](const Mat& g) {
        return pay.at(mat_delete(g, {1, n - 2}));
      });
      rhs = cc.psi_pm(1, induce(infl, ctx.Lpm(1)));
    } else {
      const FiniteMatrixGroup& pm3 = ctx.Pm3(-1);
      const Mat bb = ctx.b(n - 2), bbi = mat_inv(f, bb);
      const Mat b4 = ctx.b(n - 4), b4i = mat_inv(f, b4);
      ClassFunction infl = ClassFunction::from_rep_map(&pm3, [&](const Mat& g) {
        Mat mm = mat_mul(f, mat_mul(f, bb, ctx.mid(g)), bbi);
        Mat inner = mat_delete(mm, {0, n - 3});
        Mat x = mat_mul(f, mat_mul(f, b4i, inner), b4);
        return pay.at(cctx.s_elem(x, g(0, 0)));
      });
      rhs = cc.psi_pm(-1, induce(infl, ctx.Lpm(-1)));
    }
    out.push_back(make_check(claim + ": degree of the induced character", p, rs(index * nu.degree()),
                             rs(lhs.degree())));
    out.push_back(make_bool_check(claim, p, lhs == rhs,
                                  "degrees " + rs(lhs.degree()) + " and " + rs(rhs.degree()) + ", difference norm " +
                                      rs(inner_product(lhs - rhs, lhs - rhs))));
  }
  return out;
}

CheckList check_lgp(const OrthoContext& ctx) {
  CheckList out;
  const std::string p = ctx.tag();
  const auto& cc = CliffordContext::of(ctx);
  const auto& u = UnipotentCharacters::of(ctx);
  const auto& cu = UnipotentCharacters::of(*ctx.child());
  const Field& f = ctx.field();
  const Mat s = ctx.s(), t = ctx.t();
  const auto fusion = class_fusion(ctx.P(), ctx.G());
  for (const auto& cl : cu.labels()) {
    const ClassFunction sigma = cc.unipotent_sigma(cl);
    ClassFunction lhs = restrict_along(u.hc_induced(cl), ctx.P(), fusion);
    ClassFunction second = induce(ClassFunction::from_rep_map(&ctx.RQK(), [&](const Mat& g) {
                                    return sigma.at(ctx.levi(mat_conj(f, s, g)));
                                  }),
                                  ctx.P());
    ClassFunction third = induce(conjugate(sigma, ctx.L(), t), ctx.P());
    ClassFunction rhs = cc.psi1(sigma) + second + third;
    out.push_back(make_bool_check("R_L^G(sigma) restricted to P, sigma = " + cl.str(), p, lhs == rhs,
                                  "difference norm " + rs(inner_product(lhs - rhs, lhs - rhs))));
  }
  return out;
}

CheckList check_levi_induction(const OrthoContext& ctx) {
  CheckList out;
  const std::string p = ctx.tag();
  const auto& cc = CliffordContext::of(ctx);
  const OrthoContext& cctx = *ctx.child();
  const CharacterTable& ct = UnipotentCharacters::of(cctx).table();
  for (size_t i = 0; i < ct.size(); ++i) {
    const ClassFunction sigma = levi_character(ctx, ct[i], 0);
    ClassFunction lhs = induce(sigma, ctx.P());
    ClassFunction rhs = cc.psi1(sigma) + cc.psi0(restrict_to(ct[i], cctx.P())) +
                        cc.psi_pm(1, restrict_to(sigma, ctx.Lpm(1))) + cc.psi_pm(-1, restrict_to(sigma, ctx.Lpm(-1)));
    auto l = UnipotentCharacters::of(cctx).label_of(static_cast<int>(i));
    out.push_back(make_bool_check("Ind_L^P sigma, sigma = " + (l ? l->str() : "chi" + std::to_string(i)), p,
                                  lhs == rhs, "difference norm " + rs(inner_product(lhs - rhs, lhs - rhs))));
  }
  return out;
}

ComponentSplit steinberg_restriction(const OrthoContext& ctx) {
  if (ctx.n() < 5) throw std::invalid_argument("the Steinberg restriction formula needs n >= 5");
  const auto& cc = CliffordContext::of(ctx);
  const OrthoContext& cctx = *ctx.child();
  const ClassFunction st_l = cc.steinberg_l();
  const ClassFunction& st_child = UnipotentCharacters::of(cctx).character(steinberg_label(ctx.m() - 1));
  ClassFunction sum = cc.psi1(st_l) + cc.psi0(restrict_to(st_child, cctx.P())) +
                      cc.psi_pm(1, restrict_to(st_l, ctx.Lpm(1))) + cc.psi_pm(-1, restrict_to(st_l, ctx.Lpm(-1)));
  return cc.component_split(sum);
}

CheckList check_steinberg_restriction(const OrthoContext& ctx) {
  CheckList out;
  const std::string p = ctx.tag();
  const auto& cc = CliffordContext::of(ctx);
  const auto& u = UnipotentCharacters::of(ctx);
  const int m = ctx.m(), q = ctx.q();
  const ClassFunction& st = u.character(steinberg_label(m));
  ComponentSplit split = steinberg_restriction(ctx);
  ClassFunction total = split.parts[0] + split.parts[1] + split.parts[2] + split.parts[3];
  out.push_back(make_bool_check("St_G restricted to P equals the four-term formula", p,
                                total == restrict_to(st, ctx.P())));
  auto z = cc.values_on_z(restrict_to(st, ctx.P()));
  out.push_back(make_check("St_G on z_0, z_1, z_2", p, "0,0,0", z_string(z)));

  const ClassFunction rl = u.hc_induced(steinberg_label(m - 1));
  const Rational top = qpow(q, m * m);
  int found = -1, count = 0;
  for (size_t i = 0; i < u.table().size(); ++i)
    if (u.table()[i].degree() == top && inner_product(rl, u.table()[i]) > 0) {
      found = static_cast<int>(i);
      ++count;
    }
  out.push_back(make_bool_check("St_G is the unique constituent of degree q^{m^2} of R_L^G(St_L)", p,
                                count == 1 && found == u.index(steinberg_label(m))));

  if (ctx.n() == 5) {
    std::vector<std::string> plus{"1", "nu1"}, minus;
    if (q % 2) {
      plus.push_back("nu3");
      minus.push_back("nu3");
    }
    for (PType t : {PType::Plus, PType::Minus})
      for (const auto& nm : cc.payload_names(t))
        if (nm.rfind("Xi", 0) == 0) (t == PType::Plus ? plus : minus).push_back(nm);
    const auto& c3 = CliffordContext::of(*ctx.child());
    ClassFunction zero_pay = c3.irr()[c3.irr_index(PType::One, c3.payload_index(PType::One, "[-,-,1]"))].chi +
                             c3.irr()[c3.irr_index(PType::Plus, c3.payload_index(PType::Plus, "1"))].chi;
    out.push_back(make_bool_check("Type 1 component is 1psi[St_L]", p, split.payloads[0] == cc.steinberg_l()));
    out.push_back(make_bool_check("Type 0 component is 0psi[1_{P_3} + mu]", p, split.payloads[1] == zero_pay));
    out.push_back(make_bool_check("Type + component", p, split.payloads[2] == cc.payload_sum(PType::Plus, plus)));
    out.push_back(make_bool_check("Type - component", p, split.payloads[3] == cc.payload_sum(PType::Minus, minus)));
  }
  return out;
}

}  // namespace orthochar
