/**
 * @file matgrp.cpp
 * @brief Matrix arithmetic, quadratic forms, closure and conjugacy classes.
 */
#include "orthochar/matgrp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "orthochar/exact.hpp"
#include "orthochar/hashing.hpp"

namespace orthochar {

std::string Mat::key_string() const {
  std::string s(static_cast<size_t>(n) * n, '0');
  for (int i = 0; i < n * n; ++i) s[i] = static_cast<char>(a[i] < 10 ? '0' + a[i] : 'a' + a[i] - 10);
  return s;
}

Mat Mat::from_key_string(const std::string& s, int n) {
  if (static_cast<int>(s.size()) != n * n) throw std::invalid_argument("matrix key has wrong length");
  Mat m(n);
  for (int i = 0; i < n * n; ++i) {
    char c = s[i];
    m.a[i] = static_cast<uint8_t>(c <= '9' ? c - '0' : c - 'a' + 10);
  }
  return m;
}

Mat mat_identity(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat mat_zero(int n) { return Mat(n); }

Mat mat_from_ints(const Field& f, const std::vector<std::vector<long>>& rows) {
  int n = static_cast<int>(rows.size());
  if (n > kMaxDim) throw std::invalid_argument("matrix dimension exceeds 7");
  Mat m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw std::invalid_argument("matrix is not square");
    for (int j = 0; j < n; ++j) m(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

Mat mat_mul(const Field& f, const Mat& x, const Mat& y) {
  const int n = x.n;
  Mat r(n);
  switch (f.kind()) {
    case Field::Kind::Prime: {
      const int p = f.p();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          int s = 0;
          for (int k = 0; k < n; ++k) s += x.a[i * n + k] * y.a[k * n + j];
          r.a[i * n + j] = static_cast<uint8_t>(s % p);
        }
      break;
    }
    case Field::Kind::Char2: {
      const uint8_t* mt = f.mul_table();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          uint8_t s = 0;
          for (int k = 0; k < n; ++k) s ^= mt[x.a[i * n + k] * kMaxFieldOrder + y.a[k * n + j]];
          r.a[i * n + j] = s;
        }
      break;
    }
    case Field::Kind::General: {
      const uint8_t* mt = f.mul_table();
      const uint8_t* at = f.add_table();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          uint8_t s = 0;
          for (int k = 0; k < n; ++k)
            s = at[s * kMaxFieldOrder + mt[x.a[i * n + k] * kMaxFieldOrder + y.a[k * n + j]]];
          r.a[i * n + j] = s;
        }
      break;
    }
  }
  return r;
}

Mat mat_transpose(const Mat& x) {
  Mat r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) r(j, i) = x(i, j);
  return r;
}

namespace {

// Gaussian elimination on [x | aug]; returns the determinant and leaves the
// reduced augmented part in aug when x is invertible.
uint8_t eliminate(const Field& f, Mat x, Mat* aug) {
  const int n = x.n;
  uint8_t det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (x(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) {
        std::swap(x(piv, j), x(c, j));
        if (aug) std::swap((*aug)(piv, j), (*aug)(c, j));
      }
      det = f.neg(det);
    }
    uint8_t pv = x(c, c);
    det = f.mul(det, pv);
    uint8_t inv = f.inv(pv);
    for (int j = 0; j < n; ++j) {
      x(c, j) = f.mul(x(c, j), inv);
      if (aug) (*aug)(c, j) = f.mul((*aug)(c, j), inv);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || x(r, c) == 0) continue;
      uint8_t fac = x(r, c);
      for (int j = 0; j < n; ++j) {
        x(r, j) = f.sub(x(r, j), f.mul(fac, x(c, j)));
        if (aug) (*aug)(r, j) = f.sub((*aug)(r, j), f.mul(fac, (*aug)(c, j)));
      }
    }
  }
  return det;
}

}  // namespace

uint8_t mat_det(const Field& f, const Mat& x) { return eliminate(f, x, nullptr); }

Mat mat_inv(const Field& f, const Mat& x) {
  Mat aug = mat_identity(x.n);
  if (eliminate(f, x, &aug) == 0) throw std::domain_error("matrix is singular");
  return aug;
}

Mat mat_conj(const Field& f, const Mat& x, const Mat& y) {
  return mat_mul(f, mat_mul(f, mat_inv(f, x), y), x);
}

Mat mat_pow(const Field& f, Mat x, long e) {
  if (e < 0) {
    x = mat_inv(f, x);
    e = -e;
  }
  Mat r = mat_identity(x.n);
  while (e > 0) {
    if (e & 1) r = mat_mul(f, r, x);
    x = mat_mul(f, x, x);
    e >>= 1;
  }
  return r;
}

std::vector<uint8_t> mat_apply(const Field& f, const Mat& x, const std::vector<uint8_t>& v) {
  if (static_cast<int>(v.size()) != x.n) throw std::invalid_argument("vector length mismatch");
  std::vector<uint8_t> r(x.n, 0);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) r[i] = f.add(r[i], f.mul(x(i, j), v[j]));
  return r;
}

Mat mat_block(const Mat& x, int lo, int size) {
  Mat r(size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) r(i, j) = x(lo + i, lo + j);
  return r;
}

Mat mat_delete(const Mat& x, const std::vector<int>& idx) {
  std::vector<int> keep;
  for (int i = 0; i < x.n; ++i)
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(i);
  Mat r(static_cast<int>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = 0; j < keep.size(); ++j) r(i, j) = x(keep[i], keep[j]);
  return r;
}

Mat mat_diag_sum(const std::vector<Mat>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.n;
  if (n > kMaxDim) throw std::invalid_argument("matrix dimension exceeds 7");
  Mat r(n);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.n; ++i)
      for (int j = 0; j < b.n; ++j) r(off + i, off + j) = b(i, j);
    off += b.n;
  }
  return r;
}

std::string mat_str(const Mat& x) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < x.n; ++i) {
    if (i) os << ",";
    os << "[";
    for (int j = 0; j < x.n; ++j) os << (j ? "," : "") << static_cast<int>(x(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

size_t MatHash::operator()(const Mat& m) const {
  uint64_t w[6];
  std::memcpy(w, m.a.data(), 48);
  uint64_t h = 0x9e3779b97f4a7c15ULL ^ m.n ^ (static_cast<uint64_t>(m.a[48]) << 8);
  for (uint64_t x : w) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  h ^= h >> 33;
  return static_cast<size_t>(h);
}

QuadraticForm::QuadraticForm(const Field* f, Kind kind, int dim, uint8_t nu)
    : f_(f), kind_(kind), dim_(dim), nu_(nu), gram_(dim) {
  if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("form dimension out of range");
  if (kind == Kind::Odd && dim % 2 != 1) throw std::invalid_argument("odd form needs odd dimension");
  if (kind != Kind::Odd && dim % 2 != 0) throw std::invalid_argument("even form needs even dimension");
  if (kind == Kind::Minus && dim < 2) throw std::invalid_argument("minus form needs dimension >= 2");
  for (int i = 0; i < dim; ++i) gram_(i, dim - 1 - i) = 1;
  int m = rank();
  if (kind == Kind::Odd) gram_(m, m) = f->from_int(2);
  if (kind == Kind::Minus) {
    gram_(m - 1, m) = 1;
    gram_(m, m - 1) = 1;
    gram_(m - 1, m - 1) = f->from_int(2);
    gram_(m, m) = f->mul(f->from_int(2), nu);
  }
}

uint8_t QuadraticForm::eval(const std::vector<uint8_t>& v) const {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("vector length does not match form");
  const Field& f = *f_;
  uint8_t s = 0;
  int m = rank();
  if (kind_ == Kind::Odd) {
    s = f.mul(v[m], v[m]);
    for (int i = 0; i < m; ++i) s = f.add(s, f.mul(v[i], v[dim_ - 1 - i]));
  } else {
    for (int i = 0; i < m; ++i) {
      if (kind_ == Kind::Minus && i == m - 1) continue;
      s = f.add(s, f.mul(v[i], v[dim_ - 1 - i]));
    }
    if (kind_ == Kind::Minus) {
      uint8_t w1 = v[m - 1], w1p = v[m];
      s = f.add(s, f.add(f.mul(w1, w1), f.add(f.mul(w1, w1p), f.mul(nu_, f.mul(w1p, w1p)))));
    }
  }
  return s;
}

uint8_t QuadraticForm::basis_value(int i) const {
  std::vector<uint8_t> e(dim_, 0);
  e[i] = 1;
  return eval(e);
}

uint8_t quad_eval(const QuadraticForm& q, const std::vector<uint8_t>& v) { return q.eval(v); }

bool is_isometry(const QuadraticForm& q, const Mat& x) {
  if (x.n != q.dim()) throw std::invalid_argument("matrix and form dimensions differ");
  const Field& f = q.field();
  for (int i = 0; i < x.n; ++i) {
    std::vector<uint8_t> col(x.n);
    for (int r = 0; r < x.n; ++r) col[r] = x(r, i);
    if (q.eval(col) != q.basis_value(i)) return false;
  }
  return mat_mul(f, mat_mul(f, mat_transpose(x), q.gram()), x) == q.gram();
}

unsigned long long group_order_formula(OrderKind kind, int m, int q) {
  using ull = unsigned long long;
  auto pw = [](ull b, int e) {
    ull r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  };
  ull prod = 1;
  switch (kind) {
    case OrderKind::SOOdd:
    case OrderKind::GOOdd: {
      prod = pw(q, m * m);
      for (int j = 1; j <= m; ++j) prod *= pw(q, 2 * j) - 1;
      if (kind == OrderKind::GOOdd) prod *= (q % 2 == 1) ? 2 : 1;
      return prod;
    }
    default:
      break;
  }
  if (m == 0) return 1;
  bool plus = kind == OrderKind::SOPlus || kind == OrderKind::GOPlus;
  bool go = kind == OrderKind::GOPlus || kind == OrderKind::GOMinus;
  ull qm = pw(q, m);
  ull first = plus ? qm - 1 : qm + 1;
  prod = pw(q, m * (m - 1)) * first;
  for (int j = 1; j <= m - 1; ++j) prod *= pw(q, 2 * j) - 1;
  if (go) return 2 * prod;
  ull e = (first % 2 == 0) ? 2 : 1;
  return 2 * prod / e;
}

void ElementIndex::reserve(size_t n) {
  size_t cap = 16;
  while (cap < 2 * n) cap <<= 1;
  if (cap > slots_.size()) {
    slots_.assign(cap, UINT32_MAX);
    mask_ = cap - 1;
    count_ = 0;
  }
}

int64_t ElementIndex::find(const Mat& x, const std::vector<Mat>& elems) const {
  if (slots_.empty()) return -1;
  size_t h = MatHash()(x) & mask_;
  while (true) {
    uint32_t id = slots_[h];
    if (id == UINT32_MAX) return -1;
    if (elems[id] == x) return id;
    h = (h + 1) & mask_;
  }
}

void ElementIndex::grow(const std::vector<Mat>& elems) {
  size_t cap = slots_.empty() ? 16 : slots_.size() * 2;
  std::vector<uint32_t> old;
  old.swap(slots_);
  slots_.assign(cap, UINT32_MAX);
  mask_ = cap - 1;
  for (uint32_t id : old) {
    if (id == UINT32_MAX) continue;
    size_t h = MatHash()(elems[id]) & mask_;
    while (slots_[h] != UINT32_MAX) h = (h + 1) & mask_;
    slots_[h] = id;
  }
}

void ElementIndex::insert(const Mat& x, uint32_t id, const std::vector<Mat>& elems) {
  if (2 * (count_ + 1) > slots_.size()) grow(elems);
  size_t h = MatHash()(x) & mask_;
  while (slots_[h] != UINT32_MAX) h = (h + 1) & mask_;
  slots_[h] = id;
  ++count_;
}

FiniteMatrixGroup::FiniteMatrixGroup(FieldPtr f, int n, std::string name)
    : f_(std::move(f)), n_(n), name_(std::move(name)) {}

void FiniteMatrixGroup::add_element(const Mat& x) {
  uint32_t id = static_cast<uint32_t>(elems_.size());
  elems_.push_back(x);
  index_.insert(x, id, elems_);
}

GroupPtr FiniteMatrixGroup::closure(FieldPtr f, int n, const std::vector<Mat>& gens, uint64_t bound,
                                    std::string name) {
  auto g = std::make_shared<FiniteMatrixGroup>(f, n, std::move(name));
  Mat id = mat_identity(n);
  for (const auto& x : gens) {
    if (x.n != n) throw std::invalid_argument("generator dimension mismatch");
    if (mat_det(*f, x) == 0) throw std::invalid_argument("generator is not invertible");
    if (x != id && std::find(g->gens_.begin(), g->gens_.end(), x) == g->gens_.end())
      g->gens_.push_back(x);
  }
  g->add_element(id);
  const Field& fld = *f;
  for (size_t i = 0; i < g->elems_.size(); ++i) {
    for (const auto& s : g->gens_) {
      Mat y = mat_mul(fld, g->elems_[i], s);
      if (g->find(y) >= 0) continue;
      if (g->elems_.size() >= bound)
        throw std::length_error("group " + g->name_ + " exceeds the enumeration bound " +
                                std::to_string(bound));
      g->add_element(y);
    }
  }
  return g;
}

const std::vector<ConjClass>& FiniteMatrixGroup::classes() const {
  ensure_classes();
  return classes_;
}

void FiniteMatrixGroup::ensure_classes() const {
  if (!classes_ready_) {
    compute_classes();
    classes_ready_ = true;
  }
}

void FiniteMatrixGroup::compute_classes() const {
  const Field& f = *f_;
  const std::vector<Mat>& cg = conj_gens_.empty() ? gens_ : conj_gens_;
  std::vector<Mat> cginv;
  for (const auto& g : cg) cginv.push_back(mat_inv(f, g));
  const size_t N = elems_.size();
  std::vector<uint32_t> label(N, UINT32_MAX);
  struct Raw {
    std::vector<uint32_t> members;
    uint32_t rep;
    int order;
  };
  std::vector<Raw> raw;
  std::vector<uint32_t> stack;
  for (uint32_t start = 0; start < N; ++start) {
    if (label[start] != UINT32_MAX) continue;
    uint32_t cid = static_cast<uint32_t>(raw.size());
    Raw r;
    label[start] = cid;
    stack.assign(1, start);
    r.members.push_back(start);
    while (!stack.empty()) {
      uint32_t x = stack.back();
      stack.pop_back();
      for (size_t k = 0; k < cg.size(); ++k) {
        Mat y = mat_mul(f, mat_mul(f, cg[k], elems_[x]), cginv[k]);
        int64_t yid = find(y);
        if (yid < 0) throw std::logic_error("conjugate left the group " + name_);
        if (label[yid] != UINT32_MAX) continue;
        label[yid] = cid;
        stack.push_back(static_cast<uint32_t>(yid));
        r.members.push_back(static_cast<uint32_t>(yid));
      }
    }
    r.rep = r.members[0];
    for (uint32_t m : r.members)
      if (elems_[m] < elems_[r.rep]) r.rep = m;
    Mat id = mat_identity(n_), x = elems_[r.rep];
    r.order = 1;
    while (x != id) {
      x = mat_mul(f, x, elems_[r.rep]);
      ++r.order;
    }
    raw.push_back(std::move(r));
  }
  std::vector<uint32_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](uint32_t a, uint32_t b) {
    if (raw[a].order != raw[b].order) return raw[a].order < raw[b].order;
    if (raw[a].members.size() != raw[b].members.size())
      return raw[a].members.size() < raw[b].members.size();
    return elems_[raw[a].rep] < elems_[raw[b].rep];
  });
  std::vector<uint32_t> newid(raw.size());
  for (size_t i = 0; i < perm.size(); ++i) newid[perm[i]] = static_cast<uint32_t>(i);
  class_of_.assign(N, 0);
  for (size_t i = 0; i < N; ++i) class_of_[i] = newid[label[i]];
  classes_.assign(raw.size(), ConjClass());
  members_.assign(raw.size(), {});
  for (size_t i = 0; i < perm.size(); ++i) {
    Raw& r = raw[perm[i]];
    ConjClass& c = classes_[i];
    c.rep = r.rep;
    c.size = r.members.size();
    c.centralizer = N / c.size;
    if (c.centralizer * c.size != N) throw std::logic_error("class size does not divide group order");
    c.elt_order = r.order;
    std::sort(r.members.begin(), r.members.end());
    members_[i] = std::move(r.members);
  }
  for (auto& c : classes_) {
    c.powers.assign(c.elt_order, 0);
    Mat x = mat_identity(n_);
    for (int j = 0; j < c.elt_order; ++j) {
      c.powers[j] = static_cast<int>(class_of_[find(x)]);
      x = mat_mul(f, x, elems_[c.rep]);
    }
  }
}

int FiniteMatrixGroup::class_of_id(uint32_t id) const {
  ensure_classes();
  return static_cast<int>(class_of_[id]);
}

int FiniteMatrixGroup::class_of(const Mat& x) const {
  int c = class_of_or_none(x);
  if (c < 0) throw std::invalid_argument("matrix " + mat_str(x) + " is not in " + name_);
  return c;
}

int FiniteMatrixGroup::class_of_or_none(const Mat& x) const {
  int64_t id = find(x);
  if (id < 0) return -1;
  return class_of_id(static_cast<uint32_t>(id));
}

const std::vector<uint32_t>& FiniteMatrixGroup::class_members(int c) const {
  ensure_classes();
  return members_.at(c);
}

long FiniteMatrixGroup::exponent() const {
  long e = 1;
  for (const auto& c : classes()) e = lcm_l(e, c.elt_order);
  return e;
}

bool FiniteMatrixGroup::is_abelian() const { return classes().size() == elems_.size(); }

std::string FiniteMatrixGroup::content_hash() const {
  Fnv64 h;
  h.add(std::to_string(n_) + "|" + std::to_string(f_->q()) + "|" + std::to_string(order()));
  for (const auto& c : classes()) {
    h.add(elems_[c.rep].key_string());
    h.add(std::to_string(c.size));
  }
  return h.hex();
}

nlohmann::json FiniteMatrixGroup::to_json(bool with_classes) const {
  nlohmann::json j;
  j["format"] = "orthochar-group/1";
  j["name"] = name_;
  j["n"] = n_;
  j["q"] = f_->q();
  j["order"] = order();
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : gens_) gens.push_back(g.key_string());
  j["generators"] = gens;
  if (with_classes) {
    nlohmann::json cl = nlohmann::json::array();
    for (const auto& c : classes()) {
      cl.push_back({{"rep", elems_[c.rep].key_string()},
                    {"size", c.size},
                    {"centralizer", c.centralizer},
                    {"order", c.elt_order},
                    {"powers", c.powers}});
    }
    j["classes"] = cl;
  }
  return j;
}

GroupPtr subgroup_from_elements(FieldPtr f, int n, std::vector<Mat> elems, std::vector<Mat> gens,
                                std::string name) {
  auto g = std::make_shared<FiniteMatrixGroup>(f, n, std::move(name));
  g->gens_ = std::move(gens);
  g->index_.reserve(elems.size());
  for (const auto& x : elems) g->add_element(x);
  return g;
}

GroupPtr subgroup_by_predicate(const FiniteMatrixGroup& g, const std::function<bool(const Mat&)>& pred,
                               std::string name) {
  std::vector<Mat> sel;
  for (const auto& x : g.elements())
    if (pred(x)) sel.push_back(x);
  auto set = subgroup_from_elements(g.field_ptr(), g.dim(), sel, {}, name);
  Mat id = mat_identity(g.dim());
  if (!set->contains(id)) throw std::runtime_error("subset " + name + " does not contain the identity");
  // Grow a generating set greedily; every closure must stay inside the subset.
  std::vector<Mat> gens;
  GroupPtr h = FiniteMatrixGroup::closure(g.field_ptr(), g.dim(), {}, 1, name);
  for (const auto& x : sel) {
    if (h->contains(x)) continue;
    gens.push_back(x);
    try {
      h = FiniteMatrixGroup::closure(g.field_ptr(), g.dim(), gens, sel.size() + 1, name);
    } catch (const std::length_error&) {
      throw std::runtime_error("subset " + name + " is not closed under multiplication");
    }
    for (const auto& y : h->elements())
      if (!set->contains(y)) throw std::runtime_error("subset " + name + " is not closed under multiplication");
  }
  return h;
}

GroupPtr subgroup_by_generators(const FiniteMatrixGroup& g, const std::vector<Mat>& gens, std::string name) {
  auto h = FiniteMatrixGroup::closure(g.field_ptr(), g.dim(), gens, g.order() + 1, std::move(name));
  for (const auto& x : h->elements())
    if (!g.contains(x)) throw std::invalid_argument("generated subgroup " + h->name() + " leaves " + g.name());
  return h;
}

std::vector<int> class_fusion(const FiniteMatrixGroup& h, const FiniteMatrixGroup& g) {
  std::vector<int> fus;
  for (int c = 0; c < h.num_classes(); ++c) {
    int gc = g.class_of_or_none(h.class_rep(c));
    if (gc < 0) throw std::invalid_argument(h.name() + " is not contained in " + g.name());
    fus.push_back(gc);
  }
  return fus;
}

bool same_elements(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b) {
  if (a.order() != b.order()) return false;
  for (const auto& x : a.elements())
    if (!b.contains(x)) return false;
  return true;
}

GroupPtr isometry_group(FieldPtr fp, const QuadraticForm& form, uint64_t bound, std::string name) {
  const Field& f = *fp;
  const int n = form.dim();
  const int q = f.q();
  long total = 1;
  for (int i = 0; i < n; ++i) total *= q;
  std::vector<std::vector<uint8_t>> vecs(total, std::vector<uint8_t>(n));
  std::vector<uint8_t> qv(total);
  for (long v = 0; v < total; ++v) {
    long r = v;
    for (int i = 0; i < n; ++i) {
      vecs[v][i] = static_cast<uint8_t>(r % q);
      r /= q;
    }
    qv[v] = form.eval(vecs[v]);
  }
  auto polar = [&](long a, long b) {
    uint8_t s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (form.gram()(i, j) != 0)
          s = f.add(s, f.mul(vecs[a][i], f.mul(form.gram()(i, j), vecs[b][j])));
    return s;
  };
  std::vector<std::vector<long>> cand(n);
  for (int i = 0; i < n; ++i)
    for (long v = 0; v < total; ++v)
      if (qv[v] == form.basis_value(i)) cand[i].push_back(v);
  std::vector<Mat> found;
  std::vector<long> cols(n);
  std::function<void(int)> rec = [&](int j) {
    if (j == n) {
      Mat x(n);
      for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) x(r, c) = vecs[cols[c]][r];
      if (mat_det(f, x) == 0) return;
      if (found.size() >= bound) throw std::length_error("isometry group exceeds the enumeration bound");
      found.push_back(x);
      return;
    }
    for (long v : cand[j]) {
      bool ok = true;
      for (int i = 0; i < j && ok; ++i) ok = polar(cols[i], v) == form.gram()(i, j);
      if (!ok) continue;
      cols[j] = v;
      rec(j + 1);
    }
  };
  if (n > 0) rec(0);
  else found.push_back(Mat(0));
  std::sort(found.begin(), found.end());
  // A generating set is grown greedily so that classes can be computed.
  auto all = subgroup_from_elements(fp, n, found, {}, name);
  std::vector<Mat> gens;
  GroupPtr h = FiniteMatrixGroup::closure(fp, n, {}, 1, name);
  for (const auto& x : found) {
    if (h->contains(x)) continue;
    gens.push_back(x);
    h = FiniteMatrixGroup::closure(fp, n, gens, found.size() + 1, name);
  }
  if (h->order() != all->order()) throw std::logic_error("isometry set is not a group");
  return h;
}

}  // namespace orthochar
