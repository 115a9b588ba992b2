/**
 * @file ortho.cpp
 * @brief Contexts for SO_n(q), the parabolic P_n and the subgroups built around it.
 */
#include "orthochar/ortho.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace orthochar {

namespace {

uint64_t ipow(uint64_t b, int e) {
  uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

/** prod_{j=1}^{k} (q^{2j} - 1). */
uint64_t even_product(int q, int k) {
  uint64_t r = 1;
  for (int j = 1; j <= k; ++j) r *= ipow(q, 2 * j) - 1;
  return r;
}

std::string str(uint64_t x) { return std::to_string(x); }

Vec unit(int len, int i, uint8_t c = 1) {
  Vec v(len, 0);
  v[i] = c;
  return v;
}

/** Field elements p^j, a basis of GF(q) over GF(p). */
std::vector<uint8_t> additive_basis(const Field& f) {
  std::vector<uint8_t> b;
  int c = 1;
  for (int j = 0; j < f.k(); ++j, c *= f.p()) b.push_back(static_cast<uint8_t>(c));
  return b;
}

std::vector<Mat> conjugate_set(const Field& f, const std::vector<Mat>& xs, const Mat& x) {
  Mat xi = mat_inv(f, x);
  std::vector<Mat> out;
  out.reserve(xs.size());
  for (const auto& y : xs) out.push_back(mat_mul(f, mat_mul(f, x, y), xi));
  return out;
}

std::vector<Mat> filter(const std::vector<Mat>& xs, const std::function<bool(const Mat&)>& pred) {
  std::vector<Mat> out;
  for (const auto& x : xs)
    if (pred(x)) out.push_back(x);
  return out;
}

/** True when g is block upper triangular for the given block starts (last entry n). */
bool block_upper(const Mat& g, const std::vector<int>& starts) {
  auto block_of = [&](int i) {
    int b = 0;
    while (b + 1 < static_cast<int>(starts.size()) && starts[b + 1] <= i) ++b;
    return b;
  };
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (block_of(i) > block_of(j) && g(i, j) != 0) return false;
  return true;
}

}  // namespace

std::vector<Mat> product_set(const Field& f, const std::vector<Mat>& a, const std::vector<Mat>& b) {
  std::unordered_set<Mat, MatHash> seen;
  std::vector<Mat> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Mat z = mat_mul(f, x, y);
      if (seen.insert(z).second) out.push_back(z);
    }
  return out;
}

std::vector<Mat> conjugate_intersection(const FiniteMatrixGroup& g, const FiniteMatrixGroup& h, const Mat& x) {
  const Field& f = g.field();
  Mat xi = mat_inv(f, x);
  std::vector<Mat> out;
  for (const auto& y : g.elements())
    if (h.contains(mat_mul(f, mat_mul(f, xi, y), x))) out.push_back(y);
  return out;
}

bool same_set(std::vector<Mat> a, std::vector<Mat> b) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return a == b;
}

uint64_t parabolic_order_formula(int m, int q) { return ipow(q, m * m) * (q - 1) * even_product(q, m - 1); }

uint64_t ptilde_order_formula(int m, int q) {
  return ipow(q, (m - 1) * (m - 1)) * (q - 1) * even_product(q, m - 2);
}

uint64_t lpm_order_formula(int m, int q, int eps) {
  if (m == 1) return eps > 0 ? 1 : 0;
  uint64_t qm1 = ipow(q, m - 1);
  return 2 * ipow(q, (m - 1) * (m - 2)) * (eps > 0 ? qm1 - 1 : qm1 + 1) * even_product(q, m - 2);
}

GroupPtr go_even_group(int m, int q, bool plus) {
  FieldPtr f = field_of_order(q);
  if (m == 0) return FiniteMatrixGroup::closure(f, 0, {}, 1, plus ? "GO0+" : "GO0-");
  uint8_t nu = find_nu(*f).code();
  QuadraticForm form(f.get(), plus ? QuadraticForm::Kind::Plus : QuadraticForm::Kind::Minus, 2 * m, nu);
  return isometry_group(f, form, kDefaultBound,
                        "GO" + std::to_string(2 * m) + (plus ? "+" : "-") + "(" + std::to_string(q) + ")");
}

// ---------------------------------------------------------------------------
// Context construction

std::shared_ptr<const OrthoContext> OrthoContext::get(int n, int q) {
  static std::mutex reg_mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const OrthoContext>> registry;
  if (n < 1 || n > kMaxDim || n % 2 == 0) throw std::invalid_argument("n must be odd with 1 <= n <= 7");
  FieldPtr f = field_of_order(q);
  std::shared_ptr<const OrthoContext> child;
  if (n > 1) child = get(n - 2, q);
  std::lock_guard<std::mutex> lock(reg_mu);
  auto it = registry.find({n, q});
  if (it != registry.end()) return it->second;
  std::shared_ptr<const OrthoContext> ctx(new OrthoContext(n, f, child));
  registry[{n, q}] = ctx;
  return ctx;
}

OrthoContext::OrthoContext(int n, FieldPtr f, std::shared_ptr<const OrthoContext> child)
    : n_(n), m_((n - 1) / 2), f_(std::move(f)), child_(std::move(child)),
      form_(f_.get(), QuadraticForm::Kind::Odd, n) {
  nu_ = find_nu(*f_).code();
  nu_dprime_ = f_->odd() ? f_->smallest_nonsquare() : 1;
  find_transporter();
}

void OrthoContext::find_transporter() {
  const Field& f = *f_;
  const int q = f.q();
  std::vector<Vec> vecs;
  for (int a = 0; a < q * q * q; ++a)
    vecs.push_back({static_cast<uint8_t>(a % q), static_cast<uint8_t>((a / q) % q), static_cast<uint8_t>(a / (q * q))});
  QuadraticForm q3(f_.get(), QuadraticForm::Kind::Odd, 3);
  auto qprime3 = [&](const Vec& v) { return prime_form(v); };
  auto polar = [&](const std::function<uint8_t(const Vec&)>& Q, const Vec& x, const Vec& y) {
    Vec s(3);
    for (int i = 0; i < 3; ++i) s[i] = f.add(x[i], y[i]);
    return f.sub(f.sub(Q(s), Q(x)), Q(y));
  };
  std::vector<uint8_t> candidates{1};
  if (f.odd())
    for (int c = 2; c < q; ++c)
      if (!f.is_square(static_cast<uint8_t>(c))) candidates.push_back(static_cast<uint8_t>(c));
  std::function<uint8_t(const Vec&)> Q3 = [&](const Vec& v) { return q3.eval(v); };
  for (uint8_t np : candidates) {
    std::vector<Mat> found;
    std::vector<Vec> e{unit(3, 0), unit(3, 1), unit(3, 2)};
    std::vector<std::vector<int>> cand(3);
    for (int j = 0; j < 3; ++j)
      for (size_t v = 0; v < vecs.size(); ++v)
        if (qprime3(vecs[v]) == f.mul(np, Q3(e[j]))) cand[j].push_back(static_cast<int>(v));
    std::vector<int> cols(3);
    std::function<void(int)> rec = [&](int j) {
      if (j == 3) {
        Mat x(3);
        for (int c = 0; c < 3; ++c)
          for (int r = 0; r < 3; ++r) x(r, c) = vecs[cols[c]][r];
        if (mat_det(f, x) != 0) found.push_back(x);
        return;
      }
      for (int v : cand[j]) {
        bool ok = true;
        for (int i = 0; i < j && ok; ++i)
          ok = polar(qprime3, vecs[cols[i]], vecs[v]) == f.mul(np, polar(Q3, e[i], e[j]));
        if (!ok) continue;
        cols[j] = v;
        rec(j + 1);
      }
    };
    rec(0);
    if (!found.empty()) {
      nu_prime_ = np;
      b3_ = *std::min_element(found.begin(), found.end());
      return;
    }
  }
  throw std::logic_error("no transporter b'_3 exists over " + f.name());
}

Mat OrthoContext::b(int k) const {
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("b_k needs odd k >= 3");
  int mk = (k - 1) / 2;
  Mat x(k);
  for (int i = 0; i < mk - 1; ++i) {
    x(i, i) = nu_prime_;
    x(k - 1 - i, k - 1 - i) = 1;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) x(mk - 1 + i, mk - 1 + j) = b3_(i, j);
  return x;
}

uint8_t OrthoContext::prime_form(const Vec& v) const {
  const Field& f = *f_;
  int k = static_cast<int>(v.size());
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("Q' needs odd dimension >= 3");
  int mk = (k - 1) / 2;
  uint8_t v0 = v[mk], v1 = v[mk - 1], v1p = v[mk + 1];
  uint8_t s = f.add(f.mul(v0, v0), f.add(f.mul(v1, v1), f.add(f.mul(v1, v1p), f.mul(nu_, f.mul(v1p, v1p)))));
  for (int j = 2; j <= mk; ++j) s = f.add(s, f.mul(v[mk - j], v[mk + j]));
  return s;
}

// ---------------------------------------------------------------------------
// Elements

Mat OrthoContext::u(const Vec& v) const {
  const Field& f = *f_;
  const int k = n_ - 2;
  if (static_cast<int>(v.size()) != k) throw std::invalid_argument("u_n needs a vector of length n - 2");
  Mat x = mat_identity(n_);
  const int mid = (k - 1) / 2;
  uint8_t qv = f.mul(v[mid], v[mid]);
  for (int i = 0; i < mid; ++i) qv = f.add(qv, f.mul(v[i], v[k - 1 - i]));
  for (int c = 0; c < k; ++c) {
    uint8_t e = (c == mid) ? f.mul(f.from_int(2), v[mid]) : v[k - 1 - c];
    x(0, c + 1) = f.neg(e);
    x(c + 1, n_ - 1) = v[c];
  }
  x(0, n_ - 1) = f.neg(qv);
  return x;
}

Mat OrthoContext::s_elem(const Mat& x, uint8_t a) const {
  if (x.n != n_ - 2) throw std::invalid_argument("s_n needs an (n-2)-square matrix");
  if (a == 0) throw std::invalid_argument("s_n needs a nonzero scalar");
  Mat y(n_);
  y(0, 0) = a;
  y(n_ - 1, n_ - 1) = f_->inv(a);
  for (int i = 0; i < n_ - 2; ++i)
    for (int j = 0; j < n_ - 2; ++j) y(i + 1, j + 1) = x(i, j);
  return y;
}

Mat OrthoContext::weyl(int j) const {
  if (j < 1 || j > m_) throw std::invalid_argument("Weyl index out of range");
  Mat x = mat_identity(n_);
  if (j == 1) {
    x(m_ - 1, m_ - 1) = 0;
    x(m_ + 1, m_ + 1) = 0;
    x(m_ - 1, m_ + 1) = 1;
    x(m_ + 1, m_ - 1) = 1;
    x(m_, m_) = f_->neg(1);
    return x;
  }
  for (int lo : {m_ - j, m_ + j - 1}) {
    x(lo, lo) = 0;
    x(lo + 1, lo + 1) = 0;
    x(lo, lo + 1) = 1;
    x(lo + 1, lo) = 1;
  }
  return x;
}

Mat OrthoContext::t() const {
  if (m_ < 1) throw std::invalid_argument("t needs m >= 1");
  Mat x = mat_identity(n_);
  x(0, 0) = 0;
  x(n_ - 1, n_ - 1) = 0;
  x(0, n_ - 1) = 1;
  x(n_ - 1, 0) = 1;
  x(m_, m_) = f_->neg(1);
  return x;
}

Mat OrthoContext::torus(const Vec& ts) const {
  if (static_cast<int>(ts.size()) != m_) throw std::invalid_argument("torus needs m entries");
  Mat x = mat_identity(n_);
  for (int j = 1; j <= m_; ++j) {
    x(m_ - j, m_ - j) = ts[j - 1];
    x(m_ + j, m_ + j) = f_->inv(ts[j - 1]);
  }
  return x;
}

Vec OrthoContext::z_vector(int j) const {
  if (n_ < 5) throw std::invalid_argument("z_j needs n >= 5");
  const int k = n_ - 2;
  switch (j) {
    case 0: return unit(k, 0);
    case 1: return unit(k, m_ - 1);
    case 2: {
      Vec v = unit(k, 0);
      v[k - 1] = nu_dprime_;
      return v;
    }
    default: throw std::invalid_argument("z index must be 0, 1 or 2");
  }
}

Mat OrthoContext::z(int j) const { return u(z_vector(j)); }

Mat OrthoContext::levi(const Mat& g) const { return s_elem(mid(g), g(0, 0)); }

Vec OrthoContext::u_vector(const Mat& g) const {
  Vec v(n_ - 2);
  for (int i = 0; i < n_ - 2; ++i) v[i] = f_->mul(g(0, 0), g(i + 1, n_ - 1));
  return v;
}

bool OrthoContext::in_P_shape(const Mat& g) const {
  for (int i = 1; i < n_; ++i)
    if (g(i, 0) != 0) return false;
  return true;
}

bool OrthoContext::in_L_shape(const Mat& g) const {
  if (!in_P_shape(g)) return false;
  for (int i = 1; i < n_; ++i)
    if (g(0, i) != 0 || g(n_ - 1, i - 1) != 0 || g(i - 1, n_ - 1) != 0) return false;
  return true;
}

Vec OrthoContext::lambda_row(int eps) const {
  const int k = n_ - 2;
  if (eps == 1) return unit(k, m_ - 1);
  if (n_ < 5) throw std::invalid_argument("lambda^0 and lambda^- need n >= 5");
  if (eps == 0) return unit(k, k - 1);
  if (eps == -1) {
    Mat bb = b(k);
    Vec w(k);
    for (int c = 0; c < k; ++c) w[c] = bb(m_ - 1, c);
    return w;
  }
  throw std::invalid_argument("eps must be 0, +1 or -1");
}

int OrthoContext::lambda_exponent(int eps, const Vec& v) const {
  Vec w = lambda_row(eps);
  uint8_t s = 0;
  for (size_t i = 0; i < v.size(); ++i) s = f_->add(s, f_->mul(w[i], v[i]));
  return f_->trace(s);
}

Cyclotomic OrthoContext::lambda(int eps, const Vec& v) const {
  return Cyclotomic::zeta(f_->p(), lambda_exponent(eps, v));
}

// ---------------------------------------------------------------------------
// Groups

std::vector<Mat> OrthoContext::g_generators() const {
  std::vector<Mat> gens;
  if (n_ == 1) return gens;
  for (int i = 0; i < n_ - 2; ++i)
    for (uint8_t c : additive_basis(*f_)) gens.push_back(u(unit(n_ - 2, i, c)));
  if (q() > 2)
    for (int j = 1; j <= m_; ++j) {
      Vec ts(m_, 1);
      ts[j - 1] = f_->primitive();
      gens.push_back(torus(ts));
    }
  for (int j = 1; j <= m_; ++j) gens.push_back(weyl(j));
  return gens;
}

bool OrthoContext::p_enumerable() const { return n_ >= 3 && parabolic_order_formula(m_, q()) <= kDefaultBound; }

bool OrthoContext::g_enumerable() const {
  return group_order_formula(OrderKind::SOOdd, m_, q()) <= kDefaultBound;
}

const FiniteMatrixGroup& OrthoContext::lazy(const std::string& key, const std::function<GroupPtr()>& make) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = groups_.find(key);
  if (it != groups_.end()) return *it->second;
  GroupPtr g = make();
  g->set_name(key + "[" + tag() + "]");
  groups_[key] = g;
  return *g;
}

const FiniteMatrixGroup& OrthoContext::G() const {
  return lazy("G", [&] {
    if (!g_enumerable()) throw std::length_error("SO_" + std::to_string(n_) + "(" + std::to_string(q()) + ") exceeds the enumeration bound");
    return FiniteMatrixGroup::closure(f_, n_, g_generators(), kDefaultBound);
  });
}

namespace {
std::vector<Mat> u_generators(const OrthoContext& c) {
  std::vector<Mat> gens;
  for (int i = 0; i < c.n() - 2; ++i)
    for (uint8_t a : additive_basis(c.field())) gens.push_back(c.u(unit(c.n() - 2, i, a)));
  return gens;
}

std::vector<Mat> a_generators(const OrthoContext& c) {
  if (c.q() == 2) return {};
  return {c.s_elem(mat_identity(c.n() - 2), c.field().primitive())};
}

std::vector<Mat> lprime_generators(const OrthoContext& c) {
  std::vector<Mat> gens;
  for (const auto& x : c.child()->g_generators()) gens.push_back(c.s_elem(x, 1));
  return gens;
}

std::vector<Mat> concat(std::vector<Mat> a, const std::vector<Mat>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}
}  // namespace

const FiniteMatrixGroup& OrthoContext::U() const {
  return lazy("U", [&] { return FiniteMatrixGroup::closure(f_, n_, u_generators(*this)); });
}

const FiniteMatrixGroup& OrthoContext::A() const {
  return lazy("A", [&] { return FiniteMatrixGroup::closure(f_, n_, a_generators(*this)); });
}

const FiniteMatrixGroup& OrthoContext::Lprime() const {
  return lazy("Lprime", [&] { return FiniteMatrixGroup::closure(f_, n_, lprime_generators(*this)); });
}

const FiniteMatrixGroup& OrthoContext::L() const {
  return lazy("L", [&] {
    return FiniteMatrixGroup::closure(f_, n_, concat(lprime_generators(*this), a_generators(*this)));
  });
}

const FiniteMatrixGroup& OrthoContext::P() const {
  return lazy("P", [&] {
    auto gens = concat(concat(u_generators(*this), lprime_generators(*this)), a_generators(*this));
    return FiniteMatrixGroup::closure(f_, n_, gens);
  });
}

const FiniteMatrixGroup& OrthoContext::Ptilde() const {
  return lazy("Ptilde", [&] {
    if (n_ < 5) throw std::invalid_argument("P~_{n-2} needs n >= 5");
    return subgroup_by_predicate(L(), [&](const Mat& g) { return in_P_shape(mid(g)) && g(1, 1) == g(0, 0); });
  });
}

const FiniteMatrixGroup& OrthoContext::Pchild_embedded() const {
  return lazy("Pchild", [&] {
    if (n_ < 5) throw std::invalid_argument("P_{n-2} needs n >= 5");
    return subgroup_by_predicate(Lprime(), [&](const Mat& g) { return in_P_shape(mid(g)); });
  });
}

const FiniteMatrixGroup& OrthoContext::Lpm(int eps) const {
  if (eps != 1 && eps != -1) throw std::invalid_argument("L^eps needs eps = +1 or -1");
  return lazy(eps > 0 ? "Lplus" : "Lminus", [&] {
    if (eps < 0 && n_ < 5) throw std::invalid_argument("L^- needs n >= 5");
    const Field& f = *f_;
    const int k = n_ - 2, c = m_ - 1;
    Mat bb = eps < 0 ? b(k) : mat_identity(k);
    Mat bbi = mat_inv(f, bb);
    return subgroup_by_predicate(L(), [&, bb, bbi](const Mat& g) {
      Mat y = mat_mul(f, mat_mul(f, bb, mid(g)), bbi);
      uint8_t a = g(0, 0);
      if (y(c, c) != a) return false;
      for (int i = 0; i < k; ++i)
        if (i != c && (y(i, c) != 0 || y(c, i) != 0)) return false;
      return mat_det(f, mat_delete(y, {c})) == a;
    });
  });
}

const FiniteMatrixGroup& OrthoContext::Kpm(int eps) const {
  return lazy(eps > 0 ? "Kplus" : "Kminus", [&] {
    if (n_ != 5) throw std::invalid_argument("K^pm is defined for n = 5");
    const FiniteMatrixGroup& l = Lpm(eps);
    if (f_->odd()) return subgroup_by_predicate(l, [](const Mat& g) { return g(0, 0) == 1; });
    const uint64_t half = l.order() / 2;
    GroupPtr found;
    for (int c = 0; c < l.num_classes(); ++c) {
      if (static_cast<uint64_t>(l.classes()[c].elt_order) != half) continue;
      GroupPtr h = subgroup_by_generators(l, {l.class_rep(c)});
      if (found && !same_elements(*found, *h)) throw std::logic_error("cyclic index-2 subgroup is not unique");
      found = h;
    }
    if (!found) throw std::logic_error("no cyclic index-2 subgroup");
    return found;
  });
}

const FiniteMatrixGroup& OrthoContext::inertia(int eps) const {
  return lazy("I" + std::to_string(eps), [&] {
    const FiniteMatrixGroup& h = eps == 0 ? Ptilde() : Lpm(eps);
    std::vector<Mat> gens = u_generators(*this);
    gens = concat(gens, h.generators());
    return FiniteMatrixGroup::closure(f_, n_, gens);
  });
}

const FiniteMatrixGroup& OrthoContext::R() const {
  return lazy("R", [&] {
    return subgroup_by_predicate(U(), [&](const Mat& g) { return u_vector(g)[n_ - 3] == 0; });
  });
}

const FiniteMatrixGroup& OrthoContext::QK() const {
  return lazy("QK", [&] {
    if (m_ < 2) throw std::invalid_argument("Q_K needs m >= 2");
    return subgroup_by_predicate(L(), [&](const Mat& g) { return in_P_shape(mid(g)); });
  });
}

const FiniteMatrixGroup& OrthoContext::LK() const {
  return lazy("LK", [&] {
    return subgroup_by_predicate(QK(), [&](const Mat& g) {
      for (int i = 0; i < n_; ++i)
        for (int j : {1, n_ - 2})
          if (i != j && (g(i, j) != 0 || g(j, i) != 0)) return false;
      return true;
    });
  });
}

const FiniteMatrixGroup& OrthoContext::RQK() const {
  return lazy("RQK", [&] { return FiniteMatrixGroup::closure(f_, n_, concat(R().generators(), QK().generators())); });
}

const FiniteMatrixGroup& OrthoContext::Un2() const {
  return lazy("Un2", [&] {
    std::vector<Mat> gens;
    for (const auto& x : u_generators(*child())) gens.push_back(s_elem(x, 1));
    return FiniteMatrixGroup::closure(f_, n_, gens);
  });
}

const FiniteMatrixGroup& OrthoContext::An2() const {
  return lazy("An2", [&] {
    std::vector<Mat> gens;
    if (q() > 2) {
      Vec ts(m_, 1);
      ts[m_ - 2] = f_->primitive();
      gens.push_back(torus(ts));
    }
    return FiniteMatrixGroup::closure(f_, n_, gens);
  });
}

const FiniteMatrixGroup& OrthoContext::Ltilde_prime() const {
  return lazy("Ltildeprime", [&] {
    std::vector<Mat> gens;
    for (const auto& x : child()->child()->g_generators()) gens.push_back(s_elem(child()->s_elem(x, 1), 1));
    return FiniteMatrixGroup::closure(f_, n_, gens);
  });
}

const FiniteMatrixGroup& OrthoContext::Pm3(int eps) const {
  return lazy(eps > 0 ? "Pplus_n3" : "Pminus_n3", [&] {
    if (eps < 0 && m_ < 3) throw std::invalid_argument("P^-_{n-3} needs m >= 3");
    const Field& f = *f_;
    const int k = n_ - 2;
    Mat bb = eps < 0 ? b(k) : mat_identity(k);
    Mat bbi = mat_inv(f, bb);
    return subgroup_by_predicate(Lpm(eps), [&, bb, bbi](const Mat& g) {
      return in_P_shape(mat_mul(f, mat_mul(f, bb, mid(g)), bbi));
    });
  });
}

const FiniteMatrixGroup& OrthoContext::QprimeK() const {
  return lazy("QprimeK", [&] {
    if (m_ < 3) throw std::invalid_argument("Q'_K needs m >= 3");
    std::vector<int> starts{0, 1, 2, 3, n_ - 3, n_ - 2, n_ - 1, n_};
    return subgroup_by_predicate(QK(), [&, starts](const Mat& g) {
      return g(1, 1) == g(2, 2) && block_upper(g, starts);
    });
  });
}

const FiniteMatrixGroup& OrthoContext::Y() const {
  return lazy("Y", [&] {
    if (m_ < 3) throw std::invalid_argument("Y needs m >= 3");
    const Field& f = *f_;
    Mat rr = r();
    std::vector<Mat> gens;
    // ^rU_{n-2} cap U_{n-2}, ^rL_{n-2} cap U_{n-2}, ^rU_{n-2} cap L_{n-2}
    const FiniteMatrixGroup& un2 = Un2();
    std::vector<Mat> ln2;
    for (const auto& x : child()->L().elements()) ln2.push_back(s_elem(x, 1));
    auto ln2g = subgroup_from_elements(f_, n_, ln2, {}, "L_{n-2}");
    for (const auto& x : conjugate_intersection(un2, un2, rr)) gens.push_back(x);
    for (const auto& x : conjugate_intersection(un2, *ln2g, rr)) gens.push_back(x);
    for (const auto& x : conjugate_intersection(*ln2g, un2, rr)) gens.push_back(x);
    // A_{n-4} = ^rA_{n-2}, L'_{n-4}, A_{n,n-2}
    for (const auto& x : An2().generators()) gens.push_back(mat_mul(f, mat_mul(f, rr, x), mat_inv(f, rr)));
    for (const auto& x : child()->child()->child()->g_generators())
      gens.push_back(s_elem(child()->s_elem(child()->child()->s_elem(x, 1), 1), 1));
    if (q() > 2) {
      Vec ts(m_, 1);
      ts[m_ - 1] = f.primitive();
      ts[m_ - 2] = f.primitive();
      gens.push_back(torus(ts));
    }
    return FiniteMatrixGroup::closure(f_, n_, gens);
  });
}

// ---------------------------------------------------------------------------
// Orbits on Irr(U)

OrbitData OrthoContext::orbit_structure() const {
  if (n_ < 5) throw std::invalid_argument("orbit structure needs n >= 5");
  const Field& f = *f_;
  const int k = n_ - 2;
  const FiniteMatrixGroup& l = L();
  // lambda_w^g for g = s_n(x, a) is lambda_{a^{-1} w x^{-1}}; generators act through inverses.
  std::vector<std::pair<Mat, uint8_t>> acts;
  for (const auto& g : l.generators()) {
    Mat gi = mat_inv(f, g);
    acts.push_back({mid(gi), gi(0, 0)});
  }
  auto act = [&](const Vec& w, const std::pair<Mat, uint8_t>& g) {
    Vec r(k, 0);
    for (int j = 0; j < k; ++j) {
      uint8_t s = 0;
      for (int i = 0; i < k; ++i) s = f.add(s, f.mul(w[i], g.first(i, j)));
      r[j] = f.mul(f.inv(g.second), s);
    }
    return r;
  };
  auto code = [&](const Vec& w) {
    long c = 0;
    for (int i = k - 1; i >= 0; --i) c = c * f.q() + w[i];
    return c;
  };
  long total = 1;
  for (int i = 0; i < k; ++i) total *= f.q();
  std::vector<int> orbit_id(total, -1);
  std::vector<uint64_t> sizes;
  for (long start = 0; start < total; ++start) {
    if (orbit_id[start] >= 0) continue;
    Vec w(k);
    long r = start;
    for (int i = 0; i < k; ++i) {
      w[i] = static_cast<uint8_t>(r % f.q());
      r /= f.q();
    }
    int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    std::vector<Vec> stack{w};
    orbit_id[start] = id;
    while (!stack.empty()) {
      Vec x = stack.back();
      stack.pop_back();
      ++sizes[id];
      for (const auto& g : acts) {
        Vec y = act(x, g);
        long cy = code(y);
        if (orbit_id[cy] < 0) {
          orbit_id[cy] = id;
          stack.push_back(y);
        }
      }
    }
  }
  OrbitData out;
  out.orbit_count = static_cast<int>(sizes.size());
  std::vector<Vec> reps{Vec(k, 0), lambda_row(0), lambda_row(1), lambda_row(-1)};
  std::set<int> seen;
  for (const auto& w : reps) {
    int id = orbit_id[code(w)];
    out.sizes.push_back(seen.insert(id).second ? sizes[id] : 0);
    uint64_t stab = 0;
    for (const auto& g : l.elements()) {
      Mat x = mid(g);
      uint8_t ai = f.inv(g(0, 0));
      bool fixed = true;
      for (int j = 0; j < k && fixed; ++j) {
        uint8_t s = 0;
        for (int i = 0; i < k; ++i) s = f.add(s, f.mul(w[i], x(i, j)));
        fixed = s == f.mul(ai, w[j]);
      }
      if (fixed) ++stab;
    }
    out.stabilizers.push_back(stab);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dump

nlohmann::json OrthoContext::dump() const {
  nlohmann::json j;
  j["format"] = "orthochar-ortho/1";
  j["n"] = n_;
  j["q"] = q();
  j["m"] = m_;
  j["nu"] = nu_;
  j["nu_prime"] = nu_prime_;
  j["nu_dprime"] = nu_dprime_;
  j["b3"] = b3_.key_string();
  if (n_ >= 3) j["b_n"] = b(n_).key_string();
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : g_generators()) gens.push_back(g.key_string());
  j["generators"] = gens;
  if (m_ >= 2) {
    j["s"] = s().key_string();
    j["t"] = t().key_string();
  }
  if (m_ >= 3) j["r"] = r().key_string();
  if (n_ >= 5)
    for (int i = 0; i < 3; ++i) j["z" + std::to_string(i)] = z(i).key_string();
  nlohmann::json orders;
  auto put = [&](const char* name, const std::function<const FiniteMatrixGroup&()>& g) {
    try {
      orders[name] = g().order();
    } catch (const std::exception&) {
    }
  };
  if (n_ >= 3) {
    if (g_enumerable()) put("G", [&]() -> const FiniteMatrixGroup& { return G(); });
    put("P", [&]() -> const FiniteMatrixGroup& { return P(); });
    put("U", [&]() -> const FiniteMatrixGroup& { return U(); });
    put("L", [&]() -> const FiniteMatrixGroup& { return L(); });
    put("A", [&]() -> const FiniteMatrixGroup& { return A(); });
    put("L+", [&]() -> const FiniteMatrixGroup& { return Lpm(1); });
  }
  if (n_ >= 5) {
    put("L-", [&]() -> const FiniteMatrixGroup& { return Lpm(-1); });
    put("Ptilde", [&]() -> const FiniteMatrixGroup& { return Ptilde(); });
    for (int e : {0, 1, -1})
      put(e == 0 ? "I0" : (e > 0 ? "I+" : "I-"), [&, e]() -> const FiniteMatrixGroup& { return inertia(e); });
    put("R", [&]() -> const FiniteMatrixGroup& { return R(); });
    put("QK", [&]() -> const FiniteMatrixGroup& { return QK(); });
    put("LK", [&]() -> const FiniteMatrixGroup& { return LK(); });
    put("RQK", [&]() -> const FiniteMatrixGroup& { return RQK(); });
    put("P+_{n-3}", [&]() -> const FiniteMatrixGroup& { return Pm3(1); });
  }
  if (n_ >= 7) {
    put("P-_{n-3}", [&]() -> const FiniteMatrixGroup& { return Pm3(-1); });
    put("QprimeK", [&]() -> const FiniteMatrixGroup& { return QprimeK(); });
    put("Y", [&]() -> const FiniteMatrixGroup& { return Y(); });
  }
  j["orders"] = orders;
  return j;
}

// ---------------------------------------------------------------------------
// Checks

CheckList check_context(const OrthoContext& ctx) {
  CheckList out;
  const Field& f = ctx.field();
  const std::string p = ctx.tag();
  bool irreducible = true;
  for (int x = 0; x < f.q(); ++x) {
    uint8_t c = static_cast<uint8_t>(x);
    if (f.add(f.add(f.mul(c, c), c), ctx.nu()) == 0) irreducible = false;
  }
  out.push_back(make_bool_check("X^2+X+nu irreducible", p, irreducible));
  if (f.odd()) {
    out.push_back(make_bool_check("nu'' non-square", p, !f.is_square(ctx.nu_dprime())));
    out.push_back(make_bool_check("nu' is 1 or a non-square", p,
                                  ctx.nu_prime() == 1 || !f.is_square(ctx.nu_prime())));
  } else {
    out.push_back(make_check("nu'' = 1 for even q", p, "1", std::to_string(ctx.nu_dprime())));
    out.push_back(make_check("nu' = 1 for even q", p, "1", std::to_string(ctx.nu_prime())));
  }
  if (ctx.n() >= 3) {
    const int n = ctx.n();
    Mat bn = ctx.b(n);
    long total = 1;
    for (int i = 0; i < n; ++i) total *= f.q();
    bool ok = true;
    std::mt19937_64 rng(12345);
    long samples = total <= 1000000 ? total : 200000;
    for (long s = 0; s < samples && ok; ++s) {
      long code = total <= 1000000 ? s : static_cast<long>(rng() % total);
      Vec v(n);
      for (int i = 0; i < n; ++i) {
        v[i] = static_cast<uint8_t>(code % f.q());
        code /= f.q();
      }
      ok = ctx.prime_form(mat_apply(f, bn, v)) == f.mul(ctx.nu_prime(), ctx.form().eval(v));
    }
    out.push_back(make_bool_check("Q'_n(b_n v) = nu' Q_n(v)", p, ok));
  }
  return out;
}

CheckList check_orders(const OrthoContext& ctx) {
  CheckList out;
  const std::string p = ctx.tag();
  const int m = ctx.m(), q = ctx.q(), n = ctx.n();
  bool iso = true;
  for (const auto& g : ctx.g_generators()) iso = iso && is_isometry(ctx.form(), g) && ctx.field().mul(1, mat_det(ctx.field(), g)) == 1;
  out.push_back(make_bool_check("generators lie in SO_n(q)", p, iso));
  if (ctx.g_enumerable())
    out.push_back(make_check("|SO_n(q)|", p, str(group_order_formula(OrderKind::SOOdd, m, q)), str(ctx.G().order())));
  if (n < 3) return out;
  out.push_back(make_check("|U_n| = q^{n-2}", p, str(ipow(q, n - 2)), str(ctx.U().order())));
  out.push_back(make_check("|L_n| = |SO_{n-2}|(q-1)", p,
                           str(group_order_formula(OrderKind::SOOdd, m - 1, q) * (q - 1)), str(ctx.L().order())));
  if (ctx.p_enumerable()) {
    out.push_back(make_check("|P_n|", p, str(parabolic_order_formula(m, q)), str(ctx.P().order())));
    out.push_back(make_check("|P| = |U||L|", p, str(ctx.U().order() * ctx.L().order()), str(ctx.P().order())));
  } else {
    out.push_back(make_skipped("|P_n|", p, "P_n exceeds the enumeration bound"));
  }
  bool meet = true;
  for (const auto& x : ctx.U().elements())
    if (x != mat_identity(n) && ctx.L().contains(x)) meet = false;
  out.push_back(make_bool_check("U cap L = 1", p, meet));
  bool normal = true;
  const Field& f = ctx.field();
  for (const auto& l : ctx.L().generators())
    for (const auto& u : ctx.U().generators()) normal = normal && ctx.U().contains(mat_conj(f, l, u));
  out.push_back(make_bool_check("L normalizes U", p, normal));
  out.push_back(make_check("|L^+|", p, str(lpm_order_formula(m, q, 1)), str(ctx.Lpm(1).order())));
  if (n >= 5) {
    out.push_back(make_check("|L^-|", p, str(lpm_order_formula(m, q, -1)), str(ctx.Lpm(-1).order())));
    out.push_back(make_check("|P~_{n-2}|", p, str(ptilde_order_formula(m, q)), str(ctx.Ptilde().order())));
  }
  return out;
}

CheckList check_orbits(const OrthoContext& ctx) {
  CheckList out;
  const std::string p = ctx.tag();
  const int m = ctx.m(), q = ctx.q(), n = ctx.n();
  OrbitData od = ctx.orbit_structure();
  uint64_t lord = group_order_formula(OrderKind::SOOdd, m - 1, q) * (q - 1);
  out.push_back(make_check("four orbits on Irr(U)", p, "4", std::to_string(od.orbit_count)));
  uint64_t sum = 0;
  for (auto s : od.sizes) sum += s;
  out.push_back(make_check("orbit sizes add up to q^{n-2}", p, str(ipow(q, n - 2)), str(sum)));
  std::vector<uint64_t> stab{lord, ptilde_order_formula(m, q), lpm_order_formula(m, q, 1), lpm_order_formula(m, q, -1)};
  const char* names[] = {"1_U", "lambda^0", "lambda^+", "lambda^-"};
  for (int i = 0; i < 4; ++i) {
    out.push_back(make_check(std::string("orbit size of ") + names[i], p, str(lord / stab[i]), str(od.sizes[i])));
    out.push_back(make_check(std::string("|I| for ") + names[i], p, str(ipow(q, n - 2) * stab[i]),
                             str(ipow(q, n - 2) * od.stabilizers[i])));
  }
  return out;
}

CheckList check_inertia(const OrthoContext& ctx) {
  CheckList out;
  const std::string p = ctx.tag();
  const Field& f = ctx.field();
  const FiniteMatrixGroup& P = ctx.P();
  std::vector<Mat> ugens = ctx.U().generators();
  for (int eps : {0, 1, -1}) {
    std::vector<Mat> stab;
    for (const auto& g : P.elements()) {
      Mat gi = mat_inv(f, g);
      bool fixed = true;
      for (const auto& u : ugens) {
        Vec v = ctx.u_vector(u);
        Vec w = ctx.u_vector(mat_mul(f, mat_mul(f, gi, u), g));
        if (ctx.lambda_exponent(eps, v) != ctx.lambda_exponent(eps, w)) {
          fixed = false;
          break;
        }
      }
      if (fixed) stab.push_back(g);
    }
    const char* name = eps == 0 ? "I^0 = U P~_{n-2} is the stabilizer of lambda^0"
                                : (eps > 0 ? "I^+ = U L^+ is the stabilizer of lambda^+"
                                           : "I^- = U L^- is the stabilizer of lambda^-");
    out.push_back(make_bool_check(name, p, same_set(stab, ctx.inertia(eps).elements())));
  }
  return out;
}

namespace {
uint64_t centralizer_formula(int j, int m, int q) {
  bool odd = q % 2 == 1;
  uint64_t tail = even_product(q, m - 2);
  switch (j) {
    case 0: return ipow(q, m * m) * (q - 1) * tail;
    case 1: return odd ? 2 * ipow(q, m * m - m + 1) * (ipow(q, m - 1) - 1) * tail : ipow(q, m * m) * even_product(q, m - 1);
    default: return odd ? 2 * ipow(q, m * m - m + 1) * (ipow(q, m - 1) + 1) * tail : ipow(q, m * m) * tail;
  }
}
}  // namespace

CheckList check_z_classes(const OrthoContext& ctx) {
  CheckList out;
  const std::string p = ctx.tag();
  const FiniteMatrixGroup& P = ctx.P();
  std::set<int> pcls;
  uint64_t total = 1;
  for (int j = 0; j < 3; ++j) {
    int c = P.class_of(ctx.z(j));
    pcls.insert(c);
    total += P.classes()[c].size;
    out.push_back(make_check("|C_P(z_" + std::to_string(j) + ")|", p, str(centralizer_formula(j, ctx.m(), ctx.q())),
                             str(P.classes()[c].centralizer)));
  }
  out.push_back(make_check("c_0, c_1, c_2 pairwise distinct", p, "3", std::to_string(pcls.size())));
  out.push_back(make_check("1 + |c_0| + |c_1| + |c_2| = |U|", p, str(ctx.U().order()), str(total)));
  std::set<int> in_u;
  for (const auto& x : ctx.U().elements()) in_u.insert(P.class_of(x));
  out.push_back(make_check("P-classes contained in U", p, "4", std::to_string(in_u.size())));
  if (ctx.g_enumerable()) {
    std::set<int> gcls;
    for (int j = 0; j < 3; ++j) gcls.insert(ctx.G().class_of(ctx.z(j)));
    out.push_back(make_check("C_0, C_1, C_2 pairwise distinct in G", p, "3", std::to_string(gcls.size())));
  }
  return out;
}

CheckList check_double_cosets(const OrthoContext& ctx) {
  CheckList out;
  const std::string p = ctx.tag();
  const Field& f = ctx.field();
  const int n = ctx.n(), q = f.q();
  long total = 1;
  for (int i = 0; i < n; ++i) total *= q;
  auto normalize = [&](Vec v) {
    int i = 0;
    while (i < n && v[i] == 0) ++i;
    uint8_t c = f.inv(v[i]);
    for (auto& x : v) x = f.mul(c, x);
    return v;
  };
  auto code = [&](const Vec& v) {
    long c = 0;
    for (int i = n - 1; i >= 0; --i) c = c * q + v[i];
    return c;
  };
  std::vector<int> orbit(total, -2);
  long lines = 0;
  for (long c = 1; c < total; ++c) {
    Vec v(n);
    long r = c;
    for (int i = 0; i < n; ++i) {
      v[i] = static_cast<uint8_t>(r % q);
      r /= q;
    }
    if (ctx.form().eval(v) == 0 && normalize(v) == v) {
      orbit[c] = -1;
      ++lines;
    }
  }
  std::vector<Mat> gens = concat(concat(u_generators(ctx), lprime_generators(ctx)), a_generators(ctx));
  std::vector<Mat> reps{mat_identity(n), ctx.s(), ctx.t()};
  std::set<int> ids;
  long covered = 0;
  for (size_t k = 0; k < reps.size(); ++k) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = reps[k](i, 0);
    v = normalize(v);
    long c0 = code(v);
    if (orbit[c0] >= 0) {
      ids.insert(orbit[c0]);
      continue;
    }
    int id = static_cast<int>(k);
    ids.insert(id);
    orbit[c0] = id;
    std::vector<Vec> stack{v};
    while (!stack.empty()) {
      Vec x = stack.back();
      stack.pop_back();
      ++covered;
      for (const auto& g : gens) {
        Vec y = normalize(mat_apply(f, g, x));
        long cy = code(y);
        if (orbit[cy] == -1) {
          orbit[cy] = id;
          stack.push_back(y);
        }
      }
    }
  }
  out.push_back(make_check("1, s, t lie in distinct P-P double cosets", p, "3", std::to_string(ids.size())));
  out.push_back(make_check("P-P double cosets of 1, s, t cover G", p, std::to_string(lines), std::to_string(covered)));
  if (ctx.g_enumerable()) {
    const FiniteMatrixGroup& P = ctx.P();
    uint64_t sum = 0;
    for (const auto& x : reps) sum += P.order() * (P.order() / conjugate_intersection(P, P, x).size());
    out.push_back(make_check("sum of |PxP| over x in {1, s, t}", p, str(ctx.G().order()), str(sum)));
  }
  return out;
}

CheckList check_parabolic_intersections(const OrthoContext& ctx) {
  CheckList out;
  const std::string p = ctx.tag();
  const Field& f = ctx.field();
  const int n = ctx.n(), q = ctx.q();
  const Mat s = ctx.s(), t = ctx.t();
  const FiniteMatrixGroup &P = ctx.P(), &U = ctx.U(), &L = ctx.L();
  out.push_back(make_bool_check("^tP cap P = L", p, same_set(conjugate_intersection(P, P, t), L.elements())));
  auto sUU = conjugate_intersection(U, U, s);
  auto sLU = conjugate_intersection(U, L, s);
  auto sUL = conjugate_intersection(L, U, s);
  auto sLL = conjugate_intersection(L, L, s);
  auto sPP = conjugate_intersection(P, P, s);
  out.push_back(make_bool_check("^sU cap L = U_{n-2}", p, same_set(sUL, ctx.Un2().elements())));
  out.push_back(make_bool_check("Q_K = (^sU cap L) L_K", p,
                                same_set(product_set(f, sUL, ctx.LK().elements()), ctx.QK().elements())));
  out.push_back(make_bool_check("^sP cap P = (^sU cap U)(^sL cap U)(^sU cap L) L_K", p,
                                same_set(product_set(f, product_set(f, product_set(f, sUU, sLU), sUL),
                                                     ctx.LK().elements()),
                                         sPP)));
  auto sA = conjugate_set(f, ctx.A().elements(), s);
  out.push_back(make_bool_check("A_{n-2} = ^sA", p, same_set(sA, ctx.An2().elements())));
  out.push_back(make_bool_check("L_K = A x A_{n-2} x L~'_{n-2}", p,
                                same_set(product_set(f, product_set(f, ctx.A().elements(), ctx.An2().elements()),
                                                     ctx.Ltilde_prime().elements()),
                                         ctx.LK().elements())));
  auto expected_sLU = filter(U.elements(), [&](const Mat& g) {
    Vec v = ctx.u_vector(g);
    return v[0] == 0 && v[n - 3] == 0;
  });
  out.push_back(make_bool_check("^sL cap U = {u(v) : v_{m-1} = v'_{m-1} = 0}", p, same_set(sLU, expected_sLU)));
  out.push_back(make_bool_check("^sL cap L = L_K", p, same_set(sLL, ctx.LK().elements())));
  auto expected_sUU = filter(U.elements(), [&](const Mat& g) {
    Vec v = ctx.u_vector(g);
    for (int i = 1; i < n - 2; ++i)
      if (v[i] != 0) return false;
    return true;
  });
  out.push_back(make_bool_check("^sU cap U = {u(v_{m-1} e_{m-1})}", p, same_set(sUU, expected_sUU)));
  out.push_back(make_check("|^sU cap U| = q", p, std::to_string(q), std::to_string(sUU.size())));
  out.push_back(make_bool_check("^sP cap P = R Q_K", p, same_set(sPP, ctx.RQK().elements())));
  out.push_back(make_bool_check("R = (^sU cap U)(^sL cap U)", p, same_set(product_set(f, sUU, sLU), ctx.R().elements())));
  out.push_back(make_check("[U : R] = q", p, std::to_string(q), str(U.order() / ctx.R().order())));
  auto pk = FiniteMatrixGroup::closure(ctx.field_ptr(), n, concat(U.generators(), ctx.QK().generators()));
  out.push_back(make_check("[P_K : R Q_K] = q", p, std::to_string(q), str(pk->order() / ctx.RQK().order())));
  out.push_back(make_bool_check("Q_K = A x P_{n-2}", p,
                                same_set(product_set(f, ctx.A().elements(), ctx.Pchild_embedded().elements()),
                                         ctx.QK().elements()) &&
                                    ctx.QK().order() == ctx.A().order() * ctx.Pchild_embedded().order()));
  return out;
}

CheckList check_r_intersections(const OrthoContext& ctx) {
  CheckList out;
  const std::string p = ctx.tag();
  if (ctx.m() < 3) {
    out.push_back(make_skipped("^{rs}(R Q'_K) cap U P~_{n-2} = (^rR) Y", p, "needs m >= 3"));
    return out;
  }
  const Field& f = ctx.field();
  const int n = ctx.n();
  const Mat rs = mat_mul(f, ctx.r(), ctx.s());
  auto rqk = FiniteMatrixGroup::closure(ctx.field_ptr(), n, concat(ctx.R().generators(), ctx.QprimeK().generators()));
  const FiniteMatrixGroup& upt = ctx.inertia(0);
  std::vector<Mat> lhs;
  for (const auto& x : conjugate_set(f, rqk->elements(), rs))
    if (upt.contains(x)) lhs.push_back(x);
  auto rR = conjugate_set(f, ctx.R().elements(), ctx.r());
  out.push_back(make_bool_check("^{rs}(R Q'_K) cap U P~_{n-2} = (^rR) Y", p,
                                same_set(lhs, product_set(f, rR, ctx.Y().elements()))));
  auto rpp = conjugate_intersection(ctx.Pchild_embedded(), ctx.Pchild_embedded(), ctx.r());
  out.push_back(make_bool_check("A x Y = A x (^rP_{n-2} cap P_{n-2})", p,
                                same_set(product_set(f, ctx.A().elements(), ctx.Y().elements()),
                                         product_set(f, ctx.A().elements(), rpp))));
  std::vector<int> starts{0, 1, 2, 3, n - 3, n - 2, n - 1, n};
  auto shaped = filter(ctx.Pchild_embedded().elements(), [&](const Mat& g) {
    return block_upper(g, starts) && g(1, 2) == 0 && g(n - 3, n - 2) == 0;
  });
  out.push_back(make_bool_check("^rP_{n-2} cap P_{n-2} has the block shape with a, b, x", p, same_set(rpp, shaped)));
  uint64_t qa = static_cast<uint64_t>(ctx.q() - 1);
  out.push_back(make_check("|Q'_K|", p,
                           str(qa * ipow(ctx.q(), n - 4) * ptilde_order_formula(ctx.m() - 1, ctx.q())),
                           str(ctx.QprimeK().order())));
  return out;
}

CheckList check_sp_isomorphism(const OrthoContext& ctx) {
  CheckList out;
  const std::string p = ctx.tag();
  if (ctx.field().odd()) {
    out.push_back(make_skipped("SO_{2m+1}(q) to Sp_{2m}(q)", p, "odd q"));
    return out;
  }
  const Field& f = ctx.field();
  const int n = ctx.n(), m = ctx.m();
  const FiniteMatrixGroup& G = ctx.G();
  Mat J(2 * m);
  for (int i = 0; i < 2 * m; ++i) J(i, 2 * m - 1 - i) = 1;
  auto phi = [&](const Mat& x) { return mat_delete(x, {m}); };
  bool symplectic = true, hom = true;
  std::unordered_set<Mat, MatHash> images;
  std::vector<std::pair<Mat, Mat>> gens;
  for (const auto& g : G.generators()) gens.push_back({g, phi(g)});
  for (const auto& x : G.elements()) {
    Mat y = phi(x);
    images.insert(y);
    if (mat_mul(f, mat_mul(f, mat_transpose(y), J), y) != J) symplectic = false;
    for (const auto& [g, pg] : gens)
      if (phi(mat_mul(f, x, g)) != mat_mul(f, y, pg)) hom = false;
  }
  (void)n;
  out.push_back(make_bool_check("image lies in Sp_{2m}(q)", p, symplectic));
  out.push_back(make_bool_check("deletion map is a homomorphism", p, hom));
  out.push_back(make_check("deletion map is injective", p, str(G.order()), str(images.size())));
  out.push_back(make_check("|Sp_{2m}(q)| = |SO_{2m+1}(q)|", p, str(group_order_formula(OrderKind::SOOdd, m, f.q())),
                           str(images.size())));
  return out;
}

}  // namespace orthochar
