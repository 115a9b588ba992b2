/**
 * @file symbols.hpp
 * @brief Symbols and bipartition labels of unipotent characters of SO_{2m+1}(q),
 * their degree and value polynomials, Harish-Chandra branching, and the
 * identification of unipotent characters inside a computed character table.
 */
#pragma once

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "orthochar/chartab.hpp"
#include "orthochar/check.hpp"
#include "orthochar/exact.hpp"
#include "orthochar/ortho.hpp"

namespace orthochar {

/** A symbol with strictly increasing rows; the bottom row may be empty. */
struct SymbolB {
  std::vector<int> top;
  std::vector<int> bottom;

  int defect() const { return static_cast<int>(top.size()) - static_cast<int>(bottom.size()); }
  int rank() const;
  /** Throws std::invalid_argument unless both rows increase strictly and the defect is odd and positive. */
  void validate() const;
  /** "(0 1 2 / 1 2)", with "-" for an empty row. */
  std::string str() const;
  /** Parses the form produced by str(). */
  static SymbolB parse(const std::string& s);
  bool operator==(const SymbolB& o) const = default;
};

/** The triple [alpha, beta, d]; partitions are stored with non-increasing parts. */
struct UnipotentLabel {
  std::vector<int> alpha;
  std::vector<int> beta;
  int defect = 1;

  /** |alpha| + |beta| + d'^2 + d' with d = 2d' + 1. */
  int rank() const;
  /** "[1^2,-,1]", "[21,-,1]", "[-,1^3,1]". */
  std::string str() const;
  /** Accepts str() output as well as "[2 1,-,1]" and superscript digits. */
  static UnipotentLabel parse(const std::string& s);
  auto operator<=>(const UnipotentLabel& o) const = default;
};

UnipotentLabel symbol_to_label(const SymbolB& s);
/** The reduced symbol (0 does not occur in both rows). */
SymbolB label_to_symbol(const UnipotentLabel& l);

/** Polynomial in q with rational coefficients, lowest degree first. */
class Poly {
 public:
  Poly() = default;
  Poly(long c) : c_{Rational(c)} {}  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c) : c_{c} {}  // NOLINT(google-explicit-constructor)
  /** The indeterminate q. */
  static Poly q();
  /** phi_1 = q-1, phi_2 = q+1, phi_3 = q^2+q+1, phi_4 = q^2+1, phi_6 = q^2-q+1. */
  static Poly phi(int k);
  static Poly half() { return Poly(Rational(1, 2)); }

  Rational eval(long q) const;
  std::string str() const;
  Poly& operator+=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + b * Poly(-1); }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  Poly pow(int e) const;
  bool operator==(const Poly& o) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/** One row of the label tables: label, printed symbol, degree and values on z_0, z_1, z_2. */
struct UnipotentRow {
  UnipotentLabel label;
  SymbolB symbol;
  Poly degree;
  /** Values on z_0, z_1, z_2 for odd and even q; absent for n < 5. */
  bool has_z = false;
  std::array<Poly, 3> z_odd, z_even;
};

/** The unipotent characters of SO_n(q) for n in {1, 3, 5, 7}. */
const std::vector<UnipotentRow>& unipotent_rows(int n);
/** Row for a label; the rank selects n = 2 rank + 1. Throws std::invalid_argument for unknown labels. */
const UnipotentRow& unipotent_row(const UnipotentLabel& l);
/** Exact degree of chi_l at q. */
Rational unipotent_degree(const UnipotentLabel& l, int q);
UnipotentLabel trivial_label(int m);
UnipotentLabel steinberg_label(int m);

/** Labels obtained by adding one box to alpha or to beta. */
std::vector<UnipotentLabel> hc_branch(const UnipotentLabel& l);

/** R_L^G(chi_source) = sum of chi_targets. */
struct HCIdentity {
  UnipotentLabel source;
  std::vector<UnipotentLabel> targets;
};
/** The Harish-Chandra identities stated for SO_5(q) and SO_7(q). */
const std::vector<HCIdentity>& quoted_hc_identities();

/** chi composed with the projection L -> SO_{n-2}(q), times alpha_k(a) = zeta_{q-1}^{k log a}. */
ClassFunction levi_character(const OrthoContext& ctx, const ClassFunction& chi_child_g, int k = 0);
/** Harish-Chandra induction R_L^G: inflation from L to P, then induction to G. */
ClassFunction harish_chandra(const OrthoContext& ctx, const ClassFunction& sigma_on_l);

/** The unipotent characters of SO_n(q) located in the Dixon table of G. */
class UnipotentCharacters {
 public:
  /** Built once per context; requires an enumerable G. */
  static const UnipotentCharacters& of(const OrthoContext& ctx);

  const OrthoContext& context() const { return *ctx_; }
  const CharacterTable& table() const { return table_; }
  const std::vector<UnipotentLabel>& labels() const { return labels_; }
  int index(const UnipotentLabel& l) const;
  const ClassFunction& character(const UnipotentLabel& l) const { return table_[index(l)]; }
  /** Label of table entry i, if it is unipotent. */
  std::optional<UnipotentLabel> label_of(int i) const;
  /** "fingerprint" or "fingerprint+hc". */
  const std::string& method(const UnipotentLabel& l) const { return method_.at(l); }
  /** chi_l of SO_{n-2}(q) composed with L -> SO_{n-2}(q), for a child label l. */
  ClassFunction sigma(const UnipotentLabel& child_label) const;
  /** R_L^G(sigma(child_label)). */
  ClassFunction hc_induced(const UnipotentLabel& child_label) const;
  /** Class ids of z_0, z_1, z_2 in G (n >= 5). */
  const std::array<int, 3>& z_classes() const { return z_classes_; }

 private:
  explicit UnipotentCharacters(const OrthoContext& ctx);
  const OrthoContext* ctx_;
  CharacterTable table_;
  std::vector<UnipotentLabel> labels_;
  std::map<UnipotentLabel, int> index_;
  std::map<UnipotentLabel, std::string> method_;
  std::array<int, 3> z_classes_{-1, -1, -1};
  mutable std::mutex mu_;
  mutable std::map<UnipotentLabel, ClassFunction> hc_cache_;
};

/** Symbol and bipartition round trips over the printed label tables. */
CheckList check_symbol_tables();
/** hc_branch against every quoted identity. */
CheckList check_hc_branch_labels();
/** Degrees and z-values of the identified characters, and the quoted HC identities as class functions. */
CheckList check_unipotent(const OrthoContext& ctx);

}  // namespace orthochar
