/**
 * @file verify.cpp
 * @brief Restriction tables, property suites and the suite runner.
 */
#include "orthochar/verify.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace orthochar {

namespace {

std::string rs(const Rational& r) { return rational_to_string(r); }

int ti(PType t) { return static_cast<int>(t); }

const ContextPtr& context(int n, int q) {
  static std::map<std::pair<int, int>, ContextPtr> cache;
  auto& c = cache[{n, q}];
  if (!c) c = OrthoContext::get(n, q);
  return c;
}

/** Restriction of chi_l to P. */
ClassFunction restricted_unipotent(const OrthoContext& ctx, const UnipotentLabel& l) {
  return restrict_to(UnipotentCharacters::of(ctx).character(l), ctx.P());
}

/** Expands table tokens into payload names at this level. */
std::vector<std::string> expand_tokens(const CliffordContext& cc, PType t, const std::vector<std::string>& tokens) {
  const int q = cc.context().q();
  std::vector<std::string> names;
  for (std::string tok : tokens) {
    if (tok.size() > 2 && tok.front() == '(' && tok.back() == ')') {
      if (q % 2 == 0) continue;
      tok = tok.substr(1, tok.size() - 2);
    }
    if (tok == "Xi*") {
      for (const auto& nm : cc.payload_names(t))
        if (nm.rfind("Xi", 0) == 0) names.push_back(nm);
    } else if (t == PType::Zero && tok == "1P3") {
      names.push_back("1psi[[-,-,1]]");
    } else if (t == PType::Zero && tok == "mu") {
      names.push_back("+psi[1]");
    } else {
      names.push_back(tok);
    }
  }
  return names;
}

std::string join(const std::vector<std::string>& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " + ") + x;
  return s;
}

/** Payload names with multiplicities of one type in a split. */
std::vector<std::pair<std::string, int>> component_names(const CliffordContext& cc, const ComponentSplit& s, PType t) {
  std::vector<std::pair<std::string, int>> out;
  for (size_t i = 0; i < cc.irr().size(); ++i) {
    const auto& e = cc.irr()[i];
    if (e.label.type == t && s.multiplicities[i] > 0)
      out.emplace_back(cc.payload_names(t)[e.label.payload], s.multiplicities[i]);
  }
  return out;
}

std::string names_string(const std::vector<std::pair<std::string, int>>& v) {
  std::vector<std::string> parts;
  for (const auto& [nm, k] : v) parts.push_back(k == 1 ? nm : std::to_string(k) + "*" + nm);
  return join(parts);
}

ClassFunction zero_or(const CliffordContext& cc, PType t, const ClassFunction& f) {
  return f.group() ? f : ClassFunction::zero(&cc.payload_group(t));
}

const char* kTypeNames[4] = {"Type 1", "Type 0", "Type +", "Type -"};

}  // namespace

// ---------------------------------------------------------------------------
// Tables

const std::vector<RestrictionRow>& so5_restriction_table() {
  static const std::vector<RestrictionRow> rows{
      {"[2,-,1]", {{{"[1,-,1]"}, {}, {}, {}}}},
      {"[-,-,3]", {{{}, {}, {}, {"nu1"}}}},
      {"[1^2,-,1]", {{{"[1,-,1]"}, {"1P3"}, {}, {"1"}}}},
      {"[1,1,1]", {{{"[1,-,1]", "[-,1,1]"}, {"1P3"}, {"1"}, {}}}},
      {"[-,2,1]", {{{"[-,1,1]"}, {}, {"nu1"}, {}}}},
      {"[-,1^2,1]", {{{"[-,1,1]"}, {"1P3", "mu"}, {"1", "nu1", "(nu3)", "Xi*"}, {"(nu3)", "Xi*"}}}},
  };
  return rows;
}

const std::vector<Restriction7Row>& so7_restriction_table() {
  static const std::vector<Restriction7Row> rows{
      {"[3,-,1]", {"[2,-,1]"}, {}},
      {"[2,1,1]", {"[2,-,1]", "[1,1,1]"}, {{{"[1,-,1]"}, {}, {}, {}}}},
      {"[-,3,1]", {"[-,2,1]"}, {}},
      {"[21,-,1]", {"[2,-,1]", "[1^2,-,1]"}, {{{"[1,-,1]"}, {}, {}, {}}}},
      {"[1,-,3]", {"[-,-,3]"}, {}},
      {"[1,2,1]", {"[1,1,1]", "[-,2,1]"}, {{{"[-,1,1]"}, {}, {}, {}}}},
      {"[1^2,1,1]", {"[1^2,-,1]", "[1,1,1]"}, {{{"[1,-,1]", "[-,1,1]"}, {"1P3"}, {}, {}}}},
      {"[1,1^2,1]", {"[-,1^2,1]", "[1,1,1]"}, {{{"[1,-,1]", "[-,1,1]"}, {"1P3"}, {"1"}, {}}}},
      {"[-,21,1]", {"[-,1^2,1]", "[-,2,1]"}, {{{"[-,1,1]"}, {}, {"nu1"}, {}}}},
      {"[1^3,-,1]", {"[1^2,-,1]"}, {{{"[1,-,1]"}, {"1P3"}, {}, {"1"}}}},
      {"[-,1,3]", {"[-,-,3]"}, {{{}, {}, {}, {"nu1"}}}},
      {"[-,1^3,1]", {"[-,1^2,1]"},
       {{{"[-,1,1]"}, {"1P3", "mu"}, {"1", "nu1", "(nu3)", "Xi*"}, {"(nu3)", "Xi*"}}}},
  };
  return rows;
}

const std::vector<ComponentDegreeRow>& component_degree_table(int n) {
  static const std::vector<ComponentDegreeRow> so5 = [] {
    const Poly q = Poly::q();
    return std::vector<ComponentDegreeRow>{
        {"[2,-,1]", {1, 0, 0, 0}},
        {"[-,-,3]", {0, 0, 0, 1}},
        {"[1^2,-,1]", {1, 1, 0, 1}},
        {"[1,1,1]", {q + Poly(1), 1, 1, 0}},
        {"[-,2,1]", {q, 0, 1, 0}},
        {"[-,1^2,1]", {q, q, q, q}},
    };
  }();
  static const std::vector<ComponentDegreeRow> so7 = [] {
    const Poly q = Poly::q(), h = Poly::half(), one(1), two(2);
    const Poly q2 = q * q, q3 = q2 * q, q4 = q3 * q;
    return std::vector<ComponentDegreeRow>{
        {"[3,-,1]", {1, 0, 0, 0}},
        {"[2,1,1]", {h * (q + two) * (q2 + one), 1, 1, 0}},
        {"[-,3,1]", {h * q * (q2 + one), 0, 1, 0}},
        {"[21,-,1]", {h * (q + one) * (q2 - q + two), 1, 0, 1}},
        {"[1,-,3]", {h * q * (q - one).pow(2), 0, 0, 1}},
        {"[1,2,1]", {q * (q2 + q + one), q, two * q, 0}},
        {"[1^2,1,1]", {q * (q2 + q + one), q * (q + one), q2, q2}},
        {"[1,1^2,1]",
         {h * q * (two * q + one) * (q2 + one), h * q * (q + one).pow(2), h * q * (q + one).pow(2), h * q * (q2 + one)}},
        {"[-,21,1]", {h * q * (q2 + two * q3 + one), h * q * (q2 + one), h * q * (q + one).pow(2), h * q * (q2 + one)}},
        {"[1^3,-,1]", {h * q * (q2 + one), h * q * (q2 + one), h * q * (q - one).pow(2), h * q * (q2 + one)}},
        {"[-,1,3]", {h * q * (q - one).pow(2), h * q * (q - one).pow(2), h * q * (q - one).pow(2), h * q * (q2 + one)}},
        {"[-,1^3,1]", {q4, q4, q4, q4}},
    };
  }();
  if (n == 5) return so5;
  if (n == 7) return so7;
  throw std::invalid_argument("component-degree tables exist for n = 5 and n = 7");
}

// ---------------------------------------------------------------------------
// Decomposition records

DecompositionRecord decomposition_record(const OrthoContext& ctx, const UnipotentLabel& label) {
  const auto& cc = CliffordContext::of(ctx);
  const ClassFunction chi = restricted_unipotent(ctx, label);
  ComponentSplit s = cc.component_split(chi);
  DecompositionRecord r;
  r.label = label;
  ClassFunction total = ClassFunction::zero(&ctx.P());
  for (PType t : kPTypes) {
    r.components[ti(t)] = component_names(cc, s, t);
    r.degrees[ti(t)] = s.degrees[ti(t)];
    if (cc.has_type(t)) total += cc.psi(t, zero_or(cc, t, s.payloads[ti(t)]));
  }
  if (total != chi) throw std::logic_error("components of " + label.str() + " do not reassemble the restriction");
  return r;
}

nlohmann::json record_json(const DecompositionRecord& r) {
  nlohmann::json comps = nlohmann::json::object();
  for (PType t : kPTypes) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [nm, k] : r.components[ti(t)]) arr.push_back({{"payload", nm}, {"multiplicity", k}});
    comps[ptype_symbol(t)] = {{"degree", rs(r.degrees[ti(t)])}, {"constituents", arr}};
  }
  return {{"label", r.label.str()}, {"components", comps}};
}

std::string records_csv(int q, const std::vector<DecompositionRecord>& records, bool header) {
  std::ostringstream out;
  if (header) out << "q,label,type,payload,multiplicity\n";
  for (const auto& r : records)
    for (PType t : kPTypes)
      for (const auto& [nm, k] : r.components[ti(t)])
        out << q << ",\"" << r.label.str() << "\"," << ptype_symbol(t) << ",\"" << nm << "\"," << k << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Table checks

CheckList verify_so5_table(int q, const std::vector<RestrictionRow>& rows) {
  CheckList out;
  const OrthoContext& ctx = *context(5, q);
  const std::string p = ctx.tag();
  const auto& cc = CliffordContext::of(ctx);
  for (const auto& row : rows) {
    const UnipotentLabel l = UnipotentLabel::parse(row.label);
    ComponentSplit s = cc.component_split(restricted_unipotent(ctx, l));
    for (PType t : kPTypes) {
      auto names = expand_tokens(cc, t, row.payloads[ti(t)]);
      const ClassFunction expected = cc.payload_sum(t, names);
      const ClassFunction& got = s.payloads[ti(t)];
      CheckResult c = make_check(l.str() + " restricted to P: " + kTypeNames[ti(t)] + " payload", p, join(names),
                                 names_string(component_names(cc, s, t)));
      c.status = expected == got ? CheckResult::Status::Match : CheckResult::Status::Mismatch;
      out.push_back(c);
    }
  }
  return out;
}

CheckList verify_component_degree_table(int n, int q) {
  return verify_component_degree_table(n, q, component_degree_table(n));
}

CheckList verify_component_degree_table(int n, int q, const std::vector<ComponentDegreeRow>& rows) {
  CheckList out;
  const OrthoContext& ctx = *context(n, q);
  const std::string p = ctx.tag();
  const auto& cc = CliffordContext::of(ctx);
  const auto& u = UnipotentCharacters::of(ctx);
  for (const auto& row : rows) {
    const UnipotentLabel l = UnipotentLabel::parse(row.label);
    std::array<Rational, 4> expected;
    for (int i = 0; i < 4; ++i) expected[i] = row.degrees[i].eval(q);
    auto fmt = [](const std::array<Rational, 4>& d) {
      return "(" + rs(d[0]) + "," + rs(d[1]) + "," + rs(d[2]) + "," + rs(d[3]) + ")";
    };
    ComponentSplit s = cc.component_split(restricted_unipotent(ctx, l));
    out.push_back(make_check("component degrees of " + l.str() + " by splitting", p, fmt(expected), fmt(s.degrees)));
    const ClassFunction& chi = u.character(l);
    std::array<Rational, 4> vals{chi.degree(), chi.at(ctx.z(0)).rational(), chi.at(ctx.z(1)).rational(),
                                 chi.at(ctx.z(2)).rational()};
    std::string via;
    try {
      via = fmt(degrees_from_values(vals, ctx.m(), q));
    } catch (const std::exception& e) {
      via = e.what();
    }
    out.push_back(make_check("component degrees of " + l.str() + " from values on z", p, fmt(expected), via));
  }
  return out;
}

CheckList verify_so7_table(int q, const std::vector<Restriction7Row>& rows) {
  CheckList out;
  const OrthoContext& ctx = *context(7, q);
  const std::string p = ctx.tag();
  const auto& cc = CliffordContext::of(ctx);
  const auto& c5 = CliffordContext::of(*ctx.child());
  std::map<std::string, ComponentSplit> splits;
  for (const auto& row : rows) {
    const UnipotentLabel l = UnipotentLabel::parse(row.label);
    ComponentSplit s = cc.component_split(restricted_unipotent(ctx, l));
    splits[l.str()] = s;
    const ClassFunction expected1 = cc.payload_sum(PType::One, row.type1);
    CheckResult c1 = make_check(l.str() + " restricted to P: Type 1 payload", p, join(row.type1),
                                names_string(component_names(cc, s, PType::One)));
    c1.status = expected1 == s.payloads[0] ? CheckResult::Status::Match : CheckResult::Status::Mismatch;
    out.push_back(c1);
    ComponentSplit inner = c5.component_split(s.payloads[ti(PType::Zero)]);
    for (PType t : kPTypes) {
      auto names = expand_tokens(c5, t, row.type0[ti(t)]);
      const ClassFunction expected = c5.payload_sum(t, names);
      CheckResult c = make_check(l.str() + " restricted to P: Type 0 payload, its " + kTypeNames[ti(t)] + " part", p,
                                 join(names), names_string(component_names(c5, inner, t)));
      c.status = expected == inner.payloads[ti(t)] ? CheckResult::Status::Match : CheckResult::Status::Mismatch;
      out.push_back(c);
    }
  }

  const ComponentSplit& top = splits.at("[-,1^3,1]");
  std::vector<std::string> plus{"1", "nu1"}, minus;
  if (q % 2) {
    plus.push_back("nu3");
    minus.push_back("nu3");
  }
  for (const auto& nm : c5.payload_names(PType::Plus))
    if (nm.rfind("Xi", 0) == 0) plus.push_back(nm);
  for (const auto& nm : c5.payload_names(PType::Minus))
    if (nm.rfind("Xi", 0) == 0) minus.push_back(nm);
  const auto& c3 = CliffordContext::of(*ctx.child()->child());
  ClassFunction mu_and_one = c3.irr()[c3.irr_index(PType::One, c3.payload_index(PType::One, "[-,-,1]"))].chi +
                             c3.irr()[c3.irr_index(PType::Plus, c3.payload_index(PType::Plus, "1"))].chi;
  ClassFunction gamma = c5.psi1(c5.unipotent_sigma(UnipotentLabel::parse("[-,1,1]"))) + c5.psi0(mu_and_one) +
                        c5.psi_pm(1, c5.payload_sum(PType::Plus, plus)) +
                        c5.psi_pm(-1, c5.payload_sum(PType::Minus, minus));
  out.push_back(make_bool_check("Type 0 component of [-,1^3,1] restricted to P is 0psi[Gamma]", p,
                                top.payloads[ti(PType::Zero)] == gamma));
  const ClassFunction& st5 = UnipotentCharacters::of(*ctx.child()).character(steinberg_label(2));
  out.push_back(make_bool_check("Gamma is St of SO_5(q) restricted to P_5", p,
                                gamma == restrict_to(st5, ctx.child()->P())));

  auto empty = [&](const std::string& lab, PType t) {
    out.push_back(make_check(lab + " restricted to P has no " + kTypeNames[ti(t)] + " constituent", p, "0",
                             names_string(component_names(cc, splits.at(lab), t))));
  };
  for (const char* lab : {"[3,-,1]", "[21,-,1]", "[1,-,3]"}) empty(lab, PType::Plus);
  for (const char* lab : {"[3,-,1]", "[2,1,1]", "[-,3,1]", "[1,2,1]"}) empty(lab, PType::Minus);
  out.push_back(make_check("Type + component of [2,1,1] restricted to P", p, "1",
                           names_string(component_names(cc, splits.at("[2,1,1]"), PType::Plus))));
  out.push_back(make_check("Type - component of [21,-,1] restricted to P", p, "1",
                           names_string(component_names(cc, splits.at("[21,-,1]"), PType::Minus))));
  return out;
}

std::vector<DecompositionRecord> compute_new_pm_components(int q, CheckList* checks) {
  const OrthoContext& ctx = *context(7, q);
  std::vector<DecompositionRecord> records;
  const auto& table = component_degree_table(7);
  for (const auto& row : table) {
    DecompositionRecord r = decomposition_record(ctx, UnipotentLabel::parse(row.label));
    if (checks) {
      for (PType t : {PType::Plus, PType::Minus})
        checks->push_back(make_check(std::string(kTypeNames[ti(t)]) + " degree of " + row.label + " from its constituents",
                                     ctx.tag(), rs(row.degrees[ti(t)].eval(q)), rs(r.degrees[ti(t)])));
    }
    records.push_back(std::move(r));
  }
  return records;
}

nlohmann::json new_pm_json(int q, const std::vector<DecompositionRecord>& records) {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j = record_json(r);
    nlohmann::json pm = {{"+", j["components"]["+"]}, {"-", j["components"]["-"]}};
    recs.push_back({{"label", j["label"]}, {"components", pm}});
  }
  return {{"n", 7},
          {"q", q},
          {"status", "NEW"},
          {"note", "Type + and Type - components computed here; no reference values exist to compare against"},
          {"records", recs}};
}

// ---------------------------------------------------------------------------
// Property suites

CheckList check_field_axioms(int q) {
  CheckList out;
  FieldPtr fp = field_of_order(q);
  const Field& f = *fp;
  const std::string p = "q=" + std::to_string(q);
  bool add_ok = true, mul_ok = true, dist_ok = true, inv_ok = true, frob_ok = true, trace_ok = true;
  for (int a = 0; a < q; ++a) {
    if (f.add(a, 0) != a || f.mul(a, 1) != a || f.add(a, f.neg(a)) != 0) inv_ok = false;
    if (a != 0 && f.mul(a, f.inv(a)) != 1) inv_ok = false;
    for (int b = 0; b < q; ++b) {
      if (f.add(a, b) != f.add(b, a)) add_ok = false;
      if (f.mul(a, b) != f.mul(b, a)) mul_ok = false;
      if (f.pow(f.add(a, b), f.p()) != f.add(f.pow(a, f.p()), f.pow(b, f.p()))) frob_ok = false;
      if (f.trace(f.add(a, b)) != (f.trace(a) + f.trace(b)) % f.p()) trace_ok = false;
      for (int c = 0; c < q; ++c) {
        if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) add_ok = false;
        if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) mul_ok = false;
        if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) dist_ok = false;
      }
    }
  }
  out.push_back(make_bool_check("addition is an abelian group law", p, add_ok));
  out.push_back(make_bool_check("multiplication is associative and commutative", p, mul_ok));
  out.push_back(make_bool_check("distributivity", p, dist_ok));
  out.push_back(make_bool_check("identities and inverses", p, inv_ok));
  out.push_back(make_bool_check("Frobenius is additive", p, frob_ok));
  out.push_back(make_bool_check("trace is additive", p, trace_ok));
  int ord = 1;
  for (uint8_t x = f.primitive(); x != 1; x = f.mul(x, f.primitive())) ++ord;
  out.push_back(make_check("order of the primitive element", p, std::to_string(q - 1), std::to_string(ord)));
  int squares = 0;
  for (int a = 1; a < q; ++a) squares += f.is_square(a);
  out.push_back(make_check("nonzero squares", p, std::to_string(f.odd() ? (q - 1) / 2 : q - 1), std::to_string(squares)));
  return out;
}

CheckList check_cyclotomic_axioms(unsigned seed, int samples) {
  CheckList out;
  std::mt19937 rng(seed);
  const std::vector<long> conductors{1, 2, 3, 4, 5, 6, 8, 12, 15, 24};
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4), pick(0, static_cast<int>(conductors.size()) - 1);
  auto random_rational = [&] {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };
  auto random_element = [&](long n) {
    std::map<long, Rational> t;
    for (long e = 0; e < n; ++e)
      if (rng() % 2) t[e] = random_rational();
    return Cyclotomic::make(n, t);
  };
  int bad_ring = 0, bad_conj = 0, bad_galois = 0, bad_inverse = 0;
  for (int s = 0; s < samples; ++s) {
    const long n1 = conductors[pick(rng)], n2 = conductors[pick(rng)], n3 = conductors[pick(rng)];
    Cyclotomic a = random_element(n1), b = random_element(n2), c = random_element(n3);
    if (a + b != b + a || (a + b) + c != a + (b + c) || a * b != b * a || (a * b) * c != a * (b * c) ||
        a * (b + c) != a * b + a * c || a - a != Cyclotomic(0) || a * Cyclotomic(1) != a)
      ++bad_ring;
    if ((a * b).conj() != a.conj() * b.conj() || a.conj().conj() != a) ++bad_conj;
    const long big = 120;
    for (long k : {7L, 11L, 13L})
      if ((a * b).lift(big).galois(k) != a.lift(big).galois(k) * b.lift(big).galois(k)) ++bad_galois;
    const Rational r = random_rational();
    if (r != 0 && (a * r) / r != a) ++bad_inverse;
  }
  const std::string p = "seed=" + std::to_string(seed) + ",samples=" + std::to_string(samples);
  out.push_back(make_check("ring axioms", p, "0 failures", std::to_string(bad_ring) + " failures"));
  out.push_back(make_check("complex conjugation is a ring automorphism", p, "0 failures",
                           std::to_string(bad_conj) + " failures"));
  out.push_back(make_check("Galois automorphisms are multiplicative", p, "0 failures",
                           std::to_string(bad_galois) + " failures"));
  out.push_back(make_check("rational scaling is invertible", p, "0 failures", std::to_string(bad_inverse) + " failures"));
  return out;
}

CheckList check_frobenius(int n, int q, unsigned seed, int samples) {
  CheckList out;
  const OrthoContext& ctx = *context(n, q);
  const CharacterTable tg = character_table(ctx.G());
  const CharacterTable th = character_table(ctx.P());
  const auto fusion = class_fusion(ctx.P(), ctx.G());
  std::mt19937 rng(seed);
  std::uniform_int_distribution<size_t> pg(0, tg.size() - 1), ph(0, th.size() - 1);
  int bad = 0;
  for (int s = 0; s < samples; ++s) {
    const ClassFunction& chi = tg[pg(rng)];
    const ClassFunction& psi = th[ph(rng)];
    if (inner_product(induce(psi, ctx.G(), fusion), chi) != inner_product(psi, restrict_along(chi, ctx.P(), fusion)))
      ++bad;
  }
  out.push_back(make_check("Frobenius reciprocity for P in G", ctx.tag() + ",seed=" + std::to_string(seed), "0 failures",
                           std::to_string(bad) + " failures"));
  return out;
}

CheckList check_table_orthogonality(int n, int q) {
  CheckList out;
  const OrthoContext& ctx = *context(n, q);
  const std::string p = ctx.tag();
  auto verify = [&](const std::string& what, const FiniteMatrixGroup& g) {
    std::string err = character_table(g).verify();
    out.push_back(make_check("orthogonality of the character table of " + what, p, "", err));
  };
  verify("SO_n(q)", ctx.G());
  if (n >= 3) verify("L^+", ctx.Lpm(1));
  if (n >= 5) verify("L^-", ctx.Lpm(-1));
  return out;
}

CheckList check_go_orders(int m, int q) {
  CheckList out;
  const std::string p = "m=" + std::to_string(m) + ",q=" + std::to_string(q);
  for (bool plus : {true, false}) {
    GroupPtr g = go_even_group(m, q, plus);
    out.push_back(make_check(std::string("|GO^") + (plus ? "+" : "-") + "_{2m}(q)|", p,
                             std::to_string(group_order_formula(plus ? OrderKind::GOPlus : OrderKind::GOMinus, m, q)),
                             std::to_string(g->order())));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

void VerificationReport::add(const std::string& id, int criterion, const CheckList& checks) {
  for (const auto& c : checks) entries_.push_back(ReportEntry{id, criterion, c});
}

bool VerificationReport::ok() const {
  for (const auto& e : entries_)
    if (!e.result.ok()) return false;
  return true;
}

int VerificationReport::count(CheckResult::Status s) const {
  int k = 0;
  for (const auto& e : entries_) k += e.result.status == s;
  return k;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& e : entries_) {
    nlohmann::json j = e.result.to_json();
    j["id"] = e.id;
    j["criterion"] = e.criterion;
    items.push_back(j);
  }
  return {{"match", count(CheckResult::Status::Match)},
          {"mismatch", count(CheckResult::Status::Mismatch)},
          {"skipped", count(CheckResult::Status::Skipped)},
          {"items", items}};
}

std::string VerificationReport::csv() const {
  auto quote = [](const std::string& s) {
    std::string r = "\"";
    for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
    return r + "\"";
  };
  std::ostringstream out;
  out << "id,criterion,claim,params,status,expected,computed\n";
  for (const auto& e : entries_)
    out << quote(e.id) << ',' << e.criterion << ',' << quote(e.result.claim) << ',' << quote(e.result.params) << ','
        << e.result.status_name() << ',' << quote(e.result.expected) << ',' << quote(e.result.computed) << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Suites

namespace {

using Pair = std::pair<int, int>;

void add_tuple_jobs(std::vector<SuiteJob>& jobs, int n, int q) {
  auto ctx = [n, q] { return context(n, q); };
  const std::string t = "(" + std::to_string(n) + "," + std::to_string(q) + ")";
  jobs.push_back({"table-orthogonality " + t, 13, [=] { return check_table_orthogonality(n, q); }});
  jobs.push_back({"frobenius-reciprocity " + t, 13, [=] { return check_frobenius(n, q, 20240601u, 40); }});
  jobs.push_back({"orders " + t, 1, [=] { return check_orders(*ctx()); }});
  jobs.push_back({"transporter " + t, 2, [=] { return check_context(*ctx()); }});
  jobs.push_back({"orbits " + t, 2, [=] { return check_orbits(*ctx()); }});
  jobs.push_back({"inertia " + t, 2, [=] { return check_inertia(*ctx()); }});
  jobs.push_back({"irr-parabolic " + t, 3, [=] { return check_irr_parabolic(*ctx()); }});
  jobs.push_back({"values-on-U " + t, 4, [=] { return check_values_on_z(*ctx()); }});
  jobs.push_back({"centralizers " + t, 5, [=] { return check_z_classes(*ctx()); }});
  jobs.push_back({"double-cosets " + t, 6, [=] { return check_double_cosets(*ctx()); }});
  jobs.push_back({"parabolic-intersections " + t, 6, [=] { return check_parabolic_intersections(*ctx()); }});
  if (n >= 7) jobs.push_back({"r-intersections " + t, 6, [=] { return check_r_intersections(*ctx()); }});
  jobs.push_back({"s-conjugate-induction " + t, 7, [=] { return check_rqk_induction(*ctx()); }});
  jobs.push_back({"harish-chandra-mackey " + t, 7, [=] { return check_lgp(*ctx()); }});
  jobs.push_back({"induction-from-levi " + t, 8, [=] { return check_levi_induction(*ctx()); }});
  jobs.push_back({"steinberg-restriction " + t, 8, [=] { return check_steinberg_restriction(*ctx()); }});
  jobs.push_back({"component-degrees " + t, 10, [=] { return check_component_degrees(*ctx()); }});
  jobs.push_back({"component-degree-table " + t, 10, [=] { return verify_component_degree_table(n, q); }});
  if (n == 5) jobs.push_back({"so5-restriction-table " + t, 9, [=] { return verify_so5_table(q); }});
  if (n == 7) {
    jobs.push_back({"so7-restriction-table " + t, 11, [=] { return verify_so7_table(q); }});
    jobs.push_back({"new-pm-components " + t, 11, [=] {
                      CheckList c;
                      compute_new_pm_components(q, &c);
                      return c;
                    }});
  }
  jobs.push_back({"unipotent-identification " + t, 12, [=] { return check_unipotent(*ctx()); }});
  if (q % 2 == 0) jobs.push_back({"sp-isomorphism " + t, 1, [=] { return check_sp_isomorphism(*ctx()); }});
}

void add_order_jobs(std::vector<SuiteJob>& jobs, const std::vector<int>& qs) {
  for (int q : qs) {
    for (int n : {3, 5}) {
      const std::string t = "(" + std::to_string(n) + "," + std::to_string(q) + ")";
      jobs.push_back({"orders " + t, 1, [=] { return check_orders(*context(n, q)); }});
    }
    for (int m : {1, 2})
      jobs.push_back({"go-orders (m=" + std::to_string(m) + ",q=" + std::to_string(q) + ")", 1,
                      [=] { return check_go_orders(m, q); }});
  }
}

void add_orbit_jobs(std::vector<SuiteJob>& jobs, const std::vector<Pair>& tuples) {
  for (auto [n, q] : tuples) {
    const std::string t = "(" + std::to_string(n) + "," + std::to_string(q) + ")";
    jobs.push_back({"transporter " + t, 2, [=] { return check_context(*context(n, q)); }});
    jobs.push_back({"orbits " + t, 2, [=] { return check_orbits(*context(n, q)); }});
    if (context(n, q)->p_enumerable())
      jobs.push_back({"inertia " + t, 2, [=] { return check_inertia(*context(n, q)); }});
  }
}

}  // namespace

std::vector<SuiteJob> suite_jobs(const std::string& level) {
  if (level != "quick" && level != "standard" && level != "extended")
    throw std::invalid_argument("unknown suite '" + level + "'; expected quick, standard or extended");
  std::vector<SuiteJob> jobs;
  const std::vector<int> fields = level == "quick" ? std::vector<int>{2, 3, 4, 5}
                                                   : std::vector<int>{2, 3, 4, 5, 7, 8, 9, 11, 13};
  for (int q : fields) jobs.push_back({"field-axioms (q=" + std::to_string(q) + ")", 13, [=] { return check_field_axioms(q); }});
  jobs.push_back({"cyclotomic-axioms", 13, [=] { return check_cyclotomic_axioms(7u, level == "quick" ? 50 : 400); }});
  jobs.push_back({"symbols", 12, [] { return check_symbol_tables(); }});
  jobs.push_back({"hc-branching", 12, [] { return check_hc_branch_labels(); }});
  jobs.push_back({"values-matrix-determinant", 10, [] {
                    CheckList c;
                    for (int m : {2, 3})
                      for (int q : {2, 3, 4, 5})
                        c.push_back(make_check("det M", "m=" + std::to_string(m) + ",q=" + std::to_string(q),
                                               rs(values_matrix_det_formula(m, q)), rs(values_matrix_det(m, q))));
                    return c;
                  }});
  if (level == "quick") {
    add_tuple_jobs(jobs, 5, 2);
    return jobs;
  }
  add_order_jobs(jobs, {2, 3, 4, 5});
  add_orbit_jobs(jobs, {{5, 4}, {5, 5}, {7, 3}});
  jobs.push_back({"orders (7,3)", 1, [] { return check_orders(*context(7, 3)); }});
  for (auto [n, q] : std::vector<Pair>{{5, 2}, {5, 3}, {7, 2}}) add_tuple_jobs(jobs, n, q);
  if (level == "extended") {
    jobs.push_back({"sp-isomorphism (5,4)", 1, [] { return check_sp_isomorphism(*context(5, 4)); }});
    for (int q : {4, 5}) {
      const std::string t = "(5," + std::to_string(q) + ")";
      jobs.push_back({"irr-parabolic " + t, 3, [=] { return check_irr_parabolic(*context(5, q)); }});
      jobs.push_back({"values-on-U " + t, 4, [=] { return check_values_on_z(*context(5, q)); }});
      jobs.push_back({"s-conjugate-induction " + t, 7, [=] { return check_rqk_induction(*context(5, q)); }});
    }
  }
  return jobs;
}

VerificationReport run_suite(const std::string& level, std::ostream* log) {
  VerificationReport report;
  for (const auto& job : suite_jobs(level)) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckList checks;
    try {
      checks = job.run();
    } catch (const std::exception& e) {
      checks.push_back(make_bool_check("job completed", job.id, false, e.what()));
    }
    report.add(job.id, job.criterion, checks);
    if (log) {
      int bad = 0, skipped = 0;
      for (const auto& c : checks) {
        bad += c.status == CheckResult::Status::Mismatch;
        skipped += c.status == CheckResult::Status::Skipped;
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      *log << std::left << std::setw(40) << job.id << std::right << std::setw(6) << checks.size() << " checks  "
           << std::setw(4) << bad << " mismatch  " << std::setw(4) << skipped << " skipped  " << std::fixed
           << std::setprecision(2) << secs << " s\n";
      for (const auto& c : checks)
        if (c.status == CheckResult::Status::Mismatch)
          *log << "    MISMATCH " << c.claim << " [" << c.params << "]\n      expected: " << c.expected
               << "\n      computed: " << c.computed << "\n";
      log->flush();
    }
  }
  return report;
}

}  // namespace orthochar
