/**
 * @file matgrp.hpp
 * @brief Matrices over GF(q), quadratic forms and enumerated finite matrix groups.
 */
#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "orthochar/ff.hpp"

namespace orthochar {

inline constexpr int kMaxDim = 7;

/**
 * A square matrix of size at most 7 whose entries are field codes.
 * Unused entries are always zero, so the raw byte array doubles as the
 * canonical key and the whole array can be compared and hashed at once.
 */
struct Mat {
  uint8_t n = 0;
  std::array<uint8_t, kMaxDim * kMaxDim> a{};

  Mat() = default;
  explicit Mat(int dim) : n(static_cast<uint8_t>(dim)) {}
  uint8_t& operator()(int i, int j) { return a[i * n + j]; }
  uint8_t operator()(int i, int j) const { return a[i * n + j]; }
  bool operator==(const Mat& o) const { return n == o.n && a == o.a; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  /** Lexicographic order on the canonical key. */
  bool operator<(const Mat& o) const {
    if (n != o.n) return n < o.n;
    return std::memcmp(a.data(), o.a.data(), static_cast<size_t>(n) * n) < 0;
  }
  /** Base-q digit string, row-major. */
  std::string key_string() const;
  static Mat from_key_string(const std::string& s, int n);
};

Mat mat_identity(int n);
Mat mat_zero(int n);
/** Builds a matrix from rows of small integers mapped into the prime field. */
Mat mat_from_ints(const Field& f, const std::vector<std::vector<long>>& rows);
Mat mat_mul(const Field& f, const Mat& x, const Mat& y);
Mat mat_transpose(const Mat& x);
uint8_t mat_det(const Field& f, const Mat& x);
/** Inverse; throws std::domain_error for singular input. */
Mat mat_inv(const Field& f, const Mat& x);
/** x^{-1} y x, the conjugate used for class functions ^x chi. */
Mat mat_conj(const Field& f, const Mat& x, const Mat& y);
Mat mat_pow(const Field& f, Mat x, long e);
std::vector<uint8_t> mat_apply(const Field& f, const Mat& x, const std::vector<uint8_t>& v);
/** Submatrix on rows and columns [lo, lo + size). */
Mat mat_block(const Mat& x, int lo, int size);
/** Deletes the listed rows and columns. */
Mat mat_delete(const Mat& x, const std::vector<int>& idx);
/** Block-diagonal direct sum. */
Mat mat_diag_sum(const std::vector<Mat>& blocks);
std::string mat_str(const Mat& x);

struct MatHash {
  size_t operator()(const Mat& m) const;
};

/** Quadratic forms Q_{2m+1}, Q^+_{2m}, Q^-_{2m} in the fixed coordinates. */
class QuadraticForm {
 public:
  enum class Kind { Odd, Plus, Minus };
  QuadraticForm(const Field* f, Kind kind, int dim, uint8_t nu = 0);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  int rank() const { return kind_ == Kind::Odd ? (dim_ - 1) / 2 : dim_ / 2; }
  uint8_t nu() const { return nu_; }
  const Field& field() const { return *f_; }
  /** Gram matrix of the polar form. */
  const Mat& gram() const { return gram_; }
  uint8_t eval(const std::vector<uint8_t>& v) const;
  /** Q(e_i) for the basis vector e_i. */
  uint8_t basis_value(int i) const;

 private:
  const Field* f_;
  Kind kind_;
  int dim_;
  uint8_t nu_;
  Mat gram_;
};

/** Value of Q at v; throws std::invalid_argument on dimension mismatch. */
uint8_t quad_eval(const QuadraticForm& q, const std::vector<uint8_t>& v);
/** Q(x e_i) = Q(e_i) for every i and x^T gram x = gram. */
bool is_isometry(const QuadraticForm& q, const Mat& x);

enum class OrderKind { SOOdd, GOOdd, SOPlus, GOPlus, SOMinus, GOMinus };
/** Closed order formulas for the orthogonal groups; m is the rank. */
unsigned long long group_order_formula(OrderKind kind, int m, int q);

/** Open addressing index from matrix to element id. */
class ElementIndex {
 public:
  void reserve(size_t n);
  /** Id of x, or -1. */
  int64_t find(const Mat& x, const std::vector<Mat>& elems) const;
  /** Inserts id for x, which must be absent. */
  void insert(const Mat& x, uint32_t id, const std::vector<Mat>& elems);
  size_t size() const { return count_; }

 private:
  void grow(const std::vector<Mat>& elems);
  std::vector<uint32_t> slots_;
  size_t mask_ = 0, count_ = 0;
};

struct ConjClass {
  uint32_t rep = 0;
  uint64_t size = 0;
  uint64_t centralizer = 0;
  int elt_order = 1;
  /** powers[j] is the class of rep^j for 0 <= j < elt_order. */
  std::vector<int> powers;
  /** Class of rep^p for the prime p. */
  int power_class(long p) const { return powers[p % elt_order]; }
  int inverse_class() const { return powers[(elt_order - 1) % elt_order]; }
};

/** Default enumeration bound. */
inline constexpr uint64_t kDefaultBound = 2000000;

class FiniteMatrixGroup {
 public:
  FiniteMatrixGroup(FieldPtr f, int n, std::string name = "");

  const Field& field() const { return *f_; }
  FieldPtr field_ptr() const { return f_; }
  int dim() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string s) { name_ = std::move(s); }

  const std::vector<Mat>& generators() const { return gens_; }
  uint64_t order() const { return elems_.size(); }
  const std::vector<Mat>& elements() const { return elems_; }
  const Mat& element(uint32_t id) const { return elems_[id]; }
  int64_t find(const Mat& x) const { return index_.find(x, elems_); }
  bool contains(const Mat& x) const { return find(x) >= 0; }

  /** Computes the conjugacy classes once; later calls are free. */
  void ensure_classes() const;
  const std::vector<ConjClass>& classes() const;
  int num_classes() const { return static_cast<int>(classes().size()); }
  /** Class id of element id. */
  int class_of_id(uint32_t id) const;
  /** Class id of a member; throws std::invalid_argument for non-members. */
  int class_of(const Mat& x) const;
  /** Class id of x, or -1 for non-members. */
  int class_of_or_none(const Mat& x) const;
  /** Element ids of class c, built on first use. */
  const std::vector<uint32_t>& class_members(int c) const;
  const Mat& class_rep(int c) const { return elems_[classes()[c].rep]; }
  /** Least common multiple of the element orders. */
  long exponent() const;
  bool is_abelian() const;
  /** Content hash of the element set and class ordering. */
  std::string content_hash() const;
  nlohmann::json to_json(bool with_classes = true) const;

  /** Breadth-first closure. Throws std::length_error above bound. */
  static std::shared_ptr<FiniteMatrixGroup> closure(FieldPtr f, int n, const std::vector<Mat>& gens,
                                                    uint64_t bound = kDefaultBound,
                                                    std::string name = "");
  /** Replaces the conjugation generators by a smaller set generating the same group. */
  void set_conjugation_generators(std::vector<Mat> gens) { conj_gens_ = std::move(gens); }

 private:
  friend std::shared_ptr<FiniteMatrixGroup> subgroup_by_predicate(
      const FiniteMatrixGroup&, const std::function<bool(const Mat&)>&, std::string);
  friend std::shared_ptr<FiniteMatrixGroup> subgroup_from_elements(
      FieldPtr, int, std::vector<Mat>, std::vector<Mat>, std::string);
  void add_element(const Mat& x);
  void compute_classes() const;

  FieldPtr f_;
  int n_;
  std::string name_;
  std::vector<Mat> gens_;
  std::vector<Mat> conj_gens_;
  std::vector<Mat> elems_;
  ElementIndex index_;
  mutable bool classes_ready_ = false;
  mutable std::vector<ConjClass> classes_;
  mutable std::vector<uint32_t> class_of_;
  mutable std::vector<std::vector<uint32_t>> members_;
};

using GroupPtr = std::shared_ptr<FiniteMatrixGroup>;

/**
 * Elements of g satisfying pred, verified to form a subgroup. The verification
 * also extracts a short generating set. Throws std::runtime_error when the
 * selected set is not closed.
 */
GroupPtr subgroup_by_predicate(const FiniteMatrixGroup& g, const std::function<bool(const Mat&)>& pred,
                               std::string name = "");
/** Closure of gens, verified to lie inside g. */
GroupPtr subgroup_by_generators(const FiniteMatrixGroup& g, const std::vector<Mat>& gens,
                                std::string name = "");
/** Group on a known element list that is already closed; gens generate it. */
GroupPtr subgroup_from_elements(FieldPtr f, int n, std::vector<Mat> elems, std::vector<Mat> gens,
                                std::string name = "");

/** Map from classes of h to classes of g; throws std::invalid_argument when h is not inside g. */
std::vector<int> class_fusion(const FiniteMatrixGroup& h, const FiniteMatrixGroup& g);

/** True when both groups have the same element set. */
bool same_elements(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b);

/** All x in GL_n(q) preserving q, by column backtracking; used for GO groups. */
GroupPtr isometry_group(FieldPtr f, const QuadraticForm& q, uint64_t bound = kDefaultBound,
                        std::string name = "");

}  // namespace orthochar
