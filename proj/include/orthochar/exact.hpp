/**
 * @file exact.hpp
 * @brief Exact rational and cyclotomic arithmetic.
 *
 * A Cyclotomic of conductor N is stored densely in the power basis
 * 1, z, ..., z^{phi(N)-1} of Q(z), z = exp(2 pi i / N), reduced modulo the
 * N-th cyclotomic polynomial. Binary operations lift both operands to the lcm
 * of their conductors. The smallest conductor is only searched by reduced().
 */
#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace orthochar {

using Rational = mpq_class;

/** Parses "a" or "a/b" into a normalized rational; throws std::invalid_argument. */
Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& r);

/** Euler's totient. */
long euler_phi(long n);
long gcd_l(long a, long b);
long lcm_l(long a, long b);

class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long v);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& v);  // NOLINT(google-explicit-constructor)

  /** Canonical representative of sum c_e z_N^e; exponents are taken mod N. */
  static Cyclotomic make(long N, const std::map<long, Rational>& terms);
  /** z_N^e. */
  static Cyclotomic zeta(long N, long e = 1);

  long conductor() const { return N_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  /** The same number at conductor M; throws std::invalid_argument unless N | M. */
  Cyclotomic lift(long M) const;
  /** The same number at the smallest conductor containing it. */
  Cyclotomic reduced() const;
  /** Complex conjugate, z_N -> z_N^{-1}. */
  Cyclotomic conj() const;
  /** Galois automorphism z_N -> z_N^k for k coprime to N. */
  Cyclotomic galois(long k) const;

  bool is_zero() const;
  bool is_rational() const;
  /** The rational value; throws std::domain_error when not rational. */
  Rational rational() const;
  /** True when the value is a rational integer. */
  bool is_integer() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  Cyclotomic& operator/=(const Rational& r);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator/(Cyclotomic a, const Rational& r) { return a /= r; }
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /** {"N": int, "terms": {exponent: "num/den"}} with zero terms omitted. */
  nlohmann::json to_json() const;
  static Cyclotomic from_json(const nlohmann::json& j);
  /** Human-readable form such as "-1 + 2*z5^2". */
  std::string str() const;

 private:
  long N_ = 1;
  std::vector<Rational> c_;
};

/** Coefficients of the N-th cyclotomic polynomial, lowest degree first. */
const std::vector<long>& cyclotomic_polynomial(long N);

}  // namespace orthochar
