/**
 * @file ff.hpp
 * @brief Arithmetic in small finite fields GF(p^k) and the additive character xi.
 *
 * Elements are stored as a single byte code in [0, q). The code of the residue
 * polynomial c0 + c1 X + c2 X^2 is c0 + c1 p + c2 p^2. All operations go through
 * precomputed tables, so a Field is immutable after construction.
 */
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace orthochar {

class Cyclotomic;

/** Largest field order accepted by field_make. */
inline constexpr int kMaxFieldOrder = 16;

class Field {
 public:
  enum class Kind { Prime, Char2, General };

  /** Builds GF(p^k) with the canonical modulus; throws std::invalid_argument. */
  static std::shared_ptr<const Field> make(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  Kind kind() const { return kind_; }
  /** Modulus coefficients, lowest degree first, monic of degree k. */
  const std::vector<int>& modulus() const { return modulus_; }

  uint8_t add(uint8_t a, uint8_t b) const { return add_[a * kMaxFieldOrder + b]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * kMaxFieldOrder + neg_[b]]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * kMaxFieldOrder + b]; }
  /** Multiplicative inverse; throws std::domain_error on zero. */
  uint8_t inv(uint8_t a) const;
  uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }
  uint8_t pow(uint8_t a, long e) const;
  /** Image of the integer x under Z -> GF(p) -> GF(q). */
  uint8_t from_int(long x) const;
  /** Absolute trace to GF(p), as an integer in [0, p). */
  int trace(uint8_t a) const { return trace_[a]; }
  bool is_square(uint8_t a) const { return square_[a]; }
  /** Smallest code generating the multiplicative group. */
  uint8_t primitive() const { return primitive_; }
  /** Discrete logarithm to the base primitive(); argument must be nonzero. */
  int log(uint8_t a) const { return log_[a]; }
  /** Smallest non-square in code order; 0 when every nonzero element is a square. */
  uint8_t smallest_nonsquare() const { return nonsquare_; }
  bool odd() const { return p_ != 2; }

  /** Raw tables for hot loops: row-major 16 x 16. */
  const uint8_t* add_table() const { return add_.data(); }
  const uint8_t* mul_table() const { return mul_.data(); }

  std::string name() const { return "GF(" + std::to_string(q_) + ")"; }

 private:
  Field() = default;
  int p_ = 0, k_ = 0, q_ = 0;
  Kind kind_ = Kind::Prime;
  std::vector<int> modulus_;
  std::array<uint8_t, kMaxFieldOrder * kMaxFieldOrder> add_{}, mul_{};
  std::array<uint8_t, kMaxFieldOrder> neg_{}, inv_{}, trace_{}, log_{};
  std::array<bool, kMaxFieldOrder> square_{};
  uint8_t primitive_ = 1, nonsquare_ = 0;
};

using FieldPtr = std::shared_ptr<const Field>;

/** Convenience wrapper for field_make. */
FieldPtr field_make(int p, int k);
/** Field of order q (q a prime power within range). */
FieldPtr field_of_order(int q);

/** A field element bound to its field, for readable call sites and tests. */
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Field* f, uint8_t code) : f_(f), c_(code) {}
  const Field* field() const { return f_; }
  uint8_t code() const { return c_; }
  FieldElement operator+(FieldElement o) const { return {f_, f_->add(c_, o.c_)}; }
  FieldElement operator-(FieldElement o) const { return {f_, f_->sub(c_, o.c_)}; }
  FieldElement operator-() const { return {f_, f_->neg(c_)}; }
  FieldElement operator*(FieldElement o) const { return {f_, f_->mul(c_, o.c_)}; }
  FieldElement operator/(FieldElement o) const { return {f_, f_->div(c_, o.c_)}; }
  FieldElement inverse() const { return {f_, f_->inv(c_)}; }
  bool operator==(const FieldElement& o) const { return c_ == o.c_; }
  bool is_zero() const { return c_ == 0; }

 private:
  const Field* f_ = nullptr;
  uint8_t c_ = 0;
};

/** The smallest nu in code order with X^2 + X + nu irreducible over the field. */
FieldElement find_nu(const Field& f);

/** xi(x) = zeta_p^{Tr(x)}. */
class AdditiveCharacter {
 public:
  explicit AdditiveCharacter(const Field* f) : f_(f) {}
  /** Exponent of zeta_p in xi(x). */
  int exponent(uint8_t x) const { return f_->trace(x); }
  Cyclotomic value(uint8_t x) const;
  const Field& field() const { return *f_; }

 private:
  const Field* f_;
};

AdditiveCharacter additive_char(const Field& f);

bool is_prime(long n);

}  // namespace orthochar
