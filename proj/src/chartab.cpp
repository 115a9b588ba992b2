/**
 * @file chartab.cpp
 * @brief Class-function algebra and the Dixon-Schneider character table engine.
 */
#include "orthochar/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "orthochar/parallel.hpp"

namespace orthochar {

ClassFunction::ClassFunction(const FiniteMatrixGroup* g, std::vector<Cyclotomic> values)
    : g_(g), v_(std::move(values)) {
  if (static_cast<int>(v_.size()) != g_->num_classes())
    throw std::invalid_argument("class function length differs from the class count of " + g_->name());
}

ClassFunction ClassFunction::constant(const FiniteMatrixGroup* g, const Cyclotomic& c) {
  return ClassFunction(g, std::vector<Cyclotomic>(g->num_classes(), c));
}

ClassFunction ClassFunction::regular(const FiniteMatrixGroup* g) {
  std::vector<Cyclotomic> v(g->num_classes(), Cyclotomic(0));
  v[0] = Cyclotomic(static_cast<long>(g->order()));
  return ClassFunction(g, std::move(v));
}

ClassFunction ClassFunction::from_rep_map(const FiniteMatrixGroup* g,
                                          const std::function<Cyclotomic(const Mat&)>& f) {
  std::vector<Cyclotomic> v;
  v.reserve(g->num_classes());
  for (int c = 0; c < g->num_classes(); ++c) v.push_back(f(g->class_rep(c)));
  return ClassFunction(g, std::move(v));
}

const Cyclotomic& ClassFunction::at(const Mat& x) const { return v_[g_->class_of(x)]; }

Rational ClassFunction::degree() const { return v_.at(0).rational(); }

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  if (g_ != o.g_) throw std::invalid_argument("adding class functions of different groups");
  for (size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  if (g_ != o.g_) throw std::invalid_argument("subtracting class functions of different groups");
  for (size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& r) {
  for (auto& x : v_) x *= r;
  return *this;
}

bool ClassFunction::operator==(const ClassFunction& o) const { return g_ == o.g_ && v_ == o.v_; }

bool ClassFunction::is_zero() const {
  for (const auto& x : v_)
    if (!x.is_zero()) return false;
  return true;
}

ClassFunction ClassFunction::reduced() const {
  ClassFunction r = *this;
  for (auto& x : r.v_) x = x.reduced();
  return r;
}

nlohmann::json ClassFunction::to_json() const {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v_) a.push_back(x.to_json());
  return a;
}

Rational inner_product(const ClassFunction& chi, const ClassFunction& psi) {
  if (chi.group() != psi.group()) throw std::invalid_argument("inner product of class functions on different groups");
  const FiniteMatrixGroup& g = *chi.group();
  Cyclotomic s(0);
  for (int c = 0; c < g.num_classes(); ++c) {
    const Cyclotomic& a = chi[c];
    const Cyclotomic& b = psi[c];
    if (a.is_zero() || b.is_zero()) continue;
    Cyclotomic t = a * b.conj();
    t *= Rational(static_cast<long>(g.classes()[c].size));
    s += t;
  }
  s /= Rational(static_cast<long>(g.order()));
  if (!s.is_rational()) throw std::domain_error("inner product is not rational: " + s.str());
  return s.rational();
}

ClassFunction induce(const ClassFunction& phi, const FiniteMatrixGroup& g, const std::vector<int>& fusion) {
  const FiniteMatrixGroup& h = *phi.group();
  if (static_cast<int>(fusion.size()) != h.num_classes())
    throw std::invalid_argument("fusion map does not match " + h.name());
  std::vector<Cyclotomic> v(g.num_classes(), Cyclotomic(0));
  for (int c = 0; c < h.num_classes(); ++c) {
    if (phi[c].is_zero()) continue;
    v[fusion[c]] += phi[c] / Rational(static_cast<long>(h.classes()[c].centralizer));
  }
  for (int c = 0; c < g.num_classes(); ++c) v[c] *= Rational(static_cast<long>(g.classes()[c].centralizer));
  return ClassFunction(&g, std::move(v));
}

ClassFunction induce(const ClassFunction& phi, const FiniteMatrixGroup& g) {
  return induce(phi, g, class_fusion(*phi.group(), g));
}

ClassFunction restrict_along(const ClassFunction& chi, const FiniteMatrixGroup& h, const std::vector<int>& fusion) {
  if (static_cast<int>(fusion.size()) != h.num_classes())
    throw std::invalid_argument("fusion map does not match " + h.name());
  std::vector<Cyclotomic> v;
  v.reserve(fusion.size());
  for (int c : fusion) v.push_back(chi[c]);
  return ClassFunction(&h, std::move(v));
}

ClassFunction restrict_to(const ClassFunction& chi, const FiniteMatrixGroup& h) {
  return restrict_along(chi, h, class_fusion(h, *chi.group()));
}

ClassFunction inflate(const ClassFunction& chi, const FiniteMatrixGroup& h, const std::function<Mat(const Mat&)>& pi) {
  const FiniteMatrixGroup& k = *chi.group();
  return ClassFunction::from_rep_map(&h, [&](const Mat& x) { return chi[k.class_of(pi(x))]; });
}

ClassFunction tensor(const ClassFunction& a, const ClassFunction& b) {
  if (a.group() != b.group()) throw std::invalid_argument("tensor of class functions on different groups");
  std::vector<Cyclotomic> v;
  for (int c = 0; c < a.group()->num_classes(); ++c) v.push_back(a[c] * b[c]);
  return ClassFunction(a.group(), std::move(v));
}

ClassFunction conjugate(const ClassFunction& chi, const FiniteMatrixGroup& h, const Mat& x) {
  const FiniteMatrixGroup& k = *chi.group();
  const Field& f = k.field();
  Mat xi = mat_inv(f, x);
  return ClassFunction::from_rep_map(&h, [&](const Mat& g) {
    int c = k.class_of_or_none(mat_mul(f, mat_mul(f, xi, g), x));
    if (c < 0) throw std::invalid_argument("conjugating element does not map " + h.name() + " into " + k.name());
    return chi[c];
  });
}

bool is_irreducible(const ClassFunction& chi) {
  return chi[0].is_rational() && chi[0].rational() > 0 && inner_product(chi, chi) == 1;
}

bool is_character_of(const ClassFunction& chi, const std::vector<ClassFunction>& irr) {
  ClassFunction rest = chi;
  for (const auto& x : irr) {
    Rational m = inner_product(chi, x);
    if (m < 0 || m.get_den() != 1) return false;
    rest -= x * m;
  }
  return rest.is_zero();
}

CharacterTable::CharacterTable(const FiniteMatrixGroup* g, std::vector<ClassFunction> irr)
    : g_(g), irr_(std::move(irr)) {}

std::vector<Rational> CharacterTable::decompose(const ClassFunction& chi) const {
  std::vector<Rational> m;
  for (const auto& x : irr_) m.push_back(inner_product(chi, x));
  return m;
}

std::string CharacterTable::verify() const {
  const FiniteMatrixGroup& g = *g_;
  int k = g.num_classes();
  if (static_cast<int>(irr_.size()) != k)
    return "number of irreducibles " + std::to_string(irr_.size()) + " differs from class count " + std::to_string(k);
  Rational degsq = 0;
  for (const auto& x : irr_) {
    if (!x[0].is_integer() || x[0].rational() <= 0) return "degree is not a positive integer";
    degsq += x[0].rational() * x[0].rational();
    Rational quotient = Rational(static_cast<long>(g.order())) / x[0].rational();
    if (quotient.get_den() != 1)
      return "degree does not divide the group order";
  }
  if (degsq != Rational(static_cast<long>(g.order()))) return "sum of squared degrees differs from |G|";
  std::vector<std::vector<Cyclotomic>> conj(irr_.size());
  for (size_t i = 0; i < irr_.size(); ++i)
    for (int c = 0; c < k; ++c) conj[i].push_back(irr_[i][c].conj());
  for (size_t i = 0; i < irr_.size(); ++i)
    for (size_t j = i; j < irr_.size(); ++j) {
      Cyclotomic s(0);
      for (int c = 0; c < k; ++c) s += irr_[i][c] * conj[j][c] * Rational(static_cast<long>(g.classes()[c].size));
      if (s != Cyclotomic(static_cast<long>(i == j ? g.order() : 0)))
        return "row orthogonality fails for characters " + std::to_string(i) + " and " + std::to_string(j);
    }
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) {
      Cyclotomic s(0);
      for (size_t i = 0; i < irr_.size(); ++i) s += irr_[i][a] * conj[i][b];
      if (s != Cyclotomic(static_cast<long>(a == b ? g.classes()[a].centralizer : 0)))
        return "column orthogonality fails for classes " + std::to_string(a) + " and " + std::to_string(b);
    }
  for (const auto& x : irr_)
    for (int c = 0; c < k; ++c)
      if (x[g.classes()[c].inverse_class()] != x[c].conj()) return "values at inverse classes are not conjugate";
  return "";
}

nlohmann::json CharacterTable::to_json() const {
  nlohmann::json j;
  j["format"] = "orthochar-table/1";
  j["group"] = g_->name();
  j["order"] = g_->order();
  j["content_hash"] = g_->content_hash();
  nlohmann::json cl = nlohmann::json::array();
  for (const auto& c : g_->classes())
    cl.push_back({{"order", c.elt_order}, {"size", c.size}, {"centralizer", c.centralizer},
                  {"rep", g_->element(c.rep).key_string()}});
  j["classes"] = cl;
  nlohmann::json irr = nlohmann::json::array();
  for (const auto& x : irr_) irr.push_back(x.to_json());
  j["irreducibles"] = irr;
  return j;
}

CharacterTable CharacterTable::from_json(const FiniteMatrixGroup* g, const nlohmann::json& j) {
  if (j.at("format") != "orthochar-table/1") throw std::invalid_argument("unknown character table format");
  if (j.at("content_hash") != g->content_hash()) throw std::invalid_argument("character table belongs to another group");
  std::vector<ClassFunction> irr;
  for (const auto& row : j.at("irreducibles")) {
    std::vector<Cyclotomic> v;
    for (const auto& x : row) v.push_back(Cyclotomic::from_json(x));
    irr.emplace_back(g, std::move(v));
  }
  return CharacterTable(g, std::move(irr));
}

namespace {

using u64 = unsigned long long;

u64 mulmod(u64 a, u64 b, u64 m) { return (a * b) % m; }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 m) { return powmod(a, m - 2, m); }

using ModMat = std::vector<std::vector<u64>>;

// Characteristic polynomial via reduction to Hessenberg form; coefficients
// lowest degree first, monic of degree d.
std::vector<u64> charpoly(ModMat h, u64 p) {
  const size_t d = h.size();
  for (size_t m = 1; m + 1 < d; ++m) {
    size_t piv = m;
    while (piv < d && h[piv][m - 1] == 0) ++piv;
    if (piv == d) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (size_t i = 0; i < d; ++i) std::swap(h[i][piv], h[i][m]);
    }
    u64 inv = invmod(h[m][m - 1], p);
    for (size_t i = m + 1; i < d; ++i) {
      u64 f = mulmod(h[i][m - 1], inv, p);
      if (f == 0) continue;
      for (size_t j = 0; j < d; ++j) h[i][j] = (h[i][j] + p - mulmod(f, h[m][j], p)) % p;
      for (size_t j = 0; j < d; ++j) h[j][m] = (h[j][m] + mulmod(f, h[j][i], p)) % p;
    }
  }
  std::vector<std::vector<u64>> polys(d + 1);
  polys[0] = {1};
  for (size_t m = 1; m <= d; ++m) {
    std::vector<u64> pm(m + 1, 0);
    const auto& prev = polys[m - 1];
    for (size_t i = 0; i < prev.size(); ++i) {
      pm[i + 1] = (pm[i + 1] + prev[i]) % p;
      pm[i] = (pm[i] + p - mulmod(h[m - 1][m - 1], prev[i], p)) % p;
    }
    u64 t = 1;
    for (size_t i = m - 1; i >= 1; --i) {
      t = mulmod(t, h[i][i - 1], p);
      u64 coef = mulmod(h[i - 1][m - 1], t, p);
      if (coef == 0) continue;
      const auto& pi = polys[i - 1];
      for (size_t j = 0; j < pi.size(); ++j) pm[j] = (pm[j] + p - mulmod(coef, pi[j], p)) % p;
    }
    polys[m] = pm;
  }
  return polys[d];
}

// Nullspace basis of a square matrix over GF(p).
std::vector<std::vector<u64>> nullspace(ModMat a, u64 p) {
  const size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<int> pivcol;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    u64 inv = invmod(a[r][c], p);
    for (auto& x : a[r]) x = mulmod(x, inv, p);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      u64 f = a[i][c];
      for (size_t j = 0; j < cols; ++j) a[i][j] = (a[i][j] + p - mulmod(f, a[r][j], p)) % p;
    }
    pivcol.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<std::vector<u64>> basis;
  std::vector<bool> is_piv(cols, false);
  for (int c : pivcol) is_piv[c] = true;
  for (size_t free = 0; free < cols; ++free) {
    if (is_piv[free]) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = (p - a[i][free]) % p;
    basis.push_back(v);
  }
  return basis;
}

// Row-reduces a list of vectors in place; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<u64>>& rows, u64 p) {
  std::vector<int> pivs;
  size_t r = 0;
  const size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    u64 inv = invmod(rows[r][c], p);
    for (auto& x : rows[r]) x = mulmod(x, inv, p);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      u64 f = rows[i][c];
      for (size_t j = 0; j < cols; ++j) rows[i][j] = (rows[i][j] + p - mulmod(f, rows[r][j], p)) % p;
    }
    pivs.push_back(static_cast<int>(c));
    ++r;
  }
  rows.resize(r);
  return pivs;
}

struct Space {
  std::vector<std::vector<u64>> basis;
  std::vector<int> pivots;
};

bool is_prime_u(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 primitive_root(u64 p) {
  std::vector<u64> fac;
  u64 r = p - 1;
  for (u64 d = 2; d * d <= r; ++d)
    if (r % d == 0) {
      fac.push_back(d);
      while (r % d == 0) r /= d;
    }
  if (r > 1) fac.push_back(r);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 f : fac)
      if (powmod(g, (p - 1) / f, p) == 1) ok = false;
    if (ok) return g;
  }
  return 1;
}

}  // namespace

CharacterTable character_table_uncached(const FiniteMatrixGroup& g) {
  const int k = g.num_classes();
  const auto& cls = g.classes();
  const u64 order = g.order();
  const u64 e = static_cast<u64>(g.exponent());
  u64 root = static_cast<u64>(std::sqrt(static_cast<double>(order)));
  while (root * root > order) --root;
  while ((root + 1) * (root + 1) <= order) ++root;
  const u64 bound = 2 * root;
  u64 ell = e + 1;
  while (ell <= bound || !is_prime_u(ell)) ell += e;
  const u64 p = ell;
  const u64 z = powmod(primitive_root(p), (p - 1) / e, p);

  std::vector<Space> done, todo;
  {
    Space full;
    for (int i = 0; i < k; ++i) {
      std::vector<u64> v(k, 0);
      v[i] = 1;
      full.basis.push_back(v);
      full.pivots.push_back(i);
    }
    if (k == 1) done.push_back(full);
    else todo.push_back(full);
  }
  std::vector<int> order_cls(k);
  for (int i = 0; i < k; ++i) order_cls[i] = i;
  std::stable_sort(order_cls.begin(), order_cls.end(),
                   [&](int a, int b) { return cls[a].size < cls[b].size; });
  const Field& f = g.field();
  const int workers = worker_count();
  for (int j : order_cls) {
    if (todo.empty()) break;
    if (j == 0) continue;
    // M[kk][i] = #{y in class inverse(j) : class(y g_i) = kk}.
    const auto& ys = g.class_members(cls[j].inverse_class());
    ModMat m(k, std::vector<u64>(k, 0));
    std::vector<std::vector<u64>> cols(k, std::vector<u64>(k, 0));
    parallel_for(static_cast<size_t>(k), workers, [&](size_t i) {
      const Mat& gi = g.class_rep(static_cast<int>(i));
      for (uint32_t y : ys) {
        int kk = g.class_of_id(static_cast<uint32_t>(g.find(mat_mul(f, g.element(y), gi))));
        cols[i][kk] += 1;
      }
    });
    for (int i = 0; i < k; ++i)
      for (int kk = 0; kk < k; ++kk) m[kk][i] = cols[i][kk] % p;
    std::vector<Space> next;
    for (auto& sp : todo) {
      const size_t d = sp.basis.size();
      ModMat r(d, std::vector<u64>(d, 0));
      for (size_t c = 0; c < d; ++c) {
        const auto& b = sp.basis[c];
        for (size_t rr = 0; rr < d; ++rr) {
          int row = sp.pivots[rr];
          u64 s = 0;
          for (int i = 0; i < k; ++i)
            if (b[i]) s = (s + mulmod(m[row][i], b[i], p)) % p;
          r[rr][c] = s;
        }
      }
      auto cp = charpoly(r, p);
      std::vector<u64> roots;
      for (u64 lam = 0; lam < p; ++lam) {
        u64 val = 0;
        for (size_t i = cp.size(); i-- > 0;) val = (mulmod(val, lam, p) + cp[i]) % p;
        if (val == 0) roots.push_back(lam);
      }
      if (roots.size() == 1) {
        next.push_back(std::move(sp));
        continue;
      }
      for (u64 lam : roots) {
        ModMat a = r;
        for (size_t i = 0; i < d; ++i) a[i][i] = (a[i][i] + p - lam) % p;
        auto ns = nullspace(a, p);
        Space sub;
        for (const auto& coeffs : ns) {
          std::vector<u64> v(k, 0);
          for (size_t c = 0; c < d; ++c)
            if (coeffs[c])
              for (int i = 0; i < k; ++i) v[i] = (v[i] + mulmod(coeffs[c], sp.basis[c][i], p)) % p;
          sub.basis.push_back(v);
        }
        sub.pivots = rref(sub.basis, p);
        if (sub.basis.size() == 1) done.push_back(std::move(sub));
        else next.push_back(std::move(sub));
      }
    }
    todo = std::move(next);
  }
  if (!todo.empty()) throw std::logic_error("Dixon-Schneider failed to split the class algebra of " + g.name());

  std::vector<ClassFunction> irr;
  for (auto& sp : done) {
    std::vector<u64> w = sp.basis[0];
    if (w[0] == 0) throw std::logic_error("central character vanishes at the identity");
    u64 inv0 = invmod(w[0], p);
    for (auto& x : w) x = mulmod(x, inv0, p);
    u64 s = 0;
    for (int i = 0; i < k; ++i)
      s = (s + mulmod(mulmod(w[i], w[cls[i].inverse_class()], p), invmod(cls[i].size % p, p), p)) % p;
    u64 dsq = mulmod(order % p, invmod(s, p), p);
    u64 deg = 0;
    for (u64 d = 1; d * d <= order; ++d)
      if (mulmod(d, d, p) == dsq) {
        deg = d;
        break;
      }
    if (deg == 0) throw std::logic_error("no integral degree for a character of " + g.name());
    std::vector<u64> chi(k);
    for (int i = 0; i < k; ++i) chi[i] = mulmod(mulmod(w[i], deg, p), invmod(cls[i].size % p, p), p);
    std::vector<Cyclotomic> vals;
    for (int c = 0; c < k; ++c) {
      const int o = cls[c].elt_order;
      const u64 zo = powmod(z, e / o, p);
      std::map<long, Rational> terms;
      u64 total = 0;
      u64 oinv = invmod(static_cast<u64>(o) % p, p);
      for (int jj = 0; jj < o; ++jj) {
        u64 acc = 0;
        for (int i = 0; i < o; ++i) {
          u64 ex = (static_cast<u64>(o) * o - static_cast<u64>(i) * jj % o) % o;
          acc = (acc + mulmod(chi[cls[c].powers[i]], powmod(zo, ex, p), p)) % p;
        }
        u64 mult = mulmod(acc, oinv, p);
        if (mult > deg) throw std::logic_error("eigenvalue multiplicity out of range in " + g.name());
        total += mult;
        if (mult) terms[jj] = Rational(static_cast<long>(mult));
      }
      if (total != deg) throw std::logic_error("eigenvalue multiplicities do not sum to the degree");
      vals.push_back(Cyclotomic::make(o, terms).reduced());
    }
    irr.emplace_back(&g, std::move(vals));
  }
  auto key = [](const ClassFunction& x) {
    std::string s;
    for (const auto& v : x.values()) s += v.to_json().dump() + ";";
    return s;
  };
  std::sort(irr.begin(), irr.end(), [&](const ClassFunction& a, const ClassFunction& b) {
    bool ta = a == ClassFunction::trivial(a.group()), tb = b == ClassFunction::trivial(b.group());
    if (ta != tb) return ta;
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return key(a) < key(b);
  });
  CharacterTable t(&g, std::move(irr));
  std::string err = t.verify();
  if (!err.empty()) throw std::logic_error("character table of " + g.name() + " failed verification: " + err);
  return t;
}

std::string cache_dir() {
  if (const char* env = std::getenv("ORTHOCHAR_CACHE_DIR")) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME")) return std::string(xdg) + "/orthochar";
  if (const char* home = std::getenv("HOME")) return std::string(home) + "/.cache/orthochar";
  return "";
}

int worker_count() {
  if (const char* env = std::getenv("ORTHOCHAR_WORKERS")) {
    int w = std::atoi(env);
    if (w >= 1) return w;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

CharacterTable character_table(const FiniteMatrixGroup& g) {
  std::string dir = cache_dir();
  std::string path;
  if (!dir.empty()) {
    path = dir + "/table-" + g.content_hash() + ".json";
    std::ifstream in(path);
    if (in) {
      try {
        nlohmann::json j = nlohmann::json::parse(in);
        CharacterTable t = CharacterTable::from_json(&g, j);
        if (t.verify().empty()) return t;
      } catch (const std::exception&) {
        // A damaged cache entry is recomputed below.
      }
    }
  }
  CharacterTable t = character_table_uncached(g);
  if (!path.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::string tmp = path + ".tmp";
    std::ofstream out(tmp);
    if (out) {
      out << t.to_json().dump() << "\n";
      out.close();
      std::filesystem::rename(tmp, path, ec);
    }
  }
  return t;
}

}  // namespace orthochar
