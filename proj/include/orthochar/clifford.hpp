/**
 * @file clifford.hpp
 * @brief Irr(P_n) by Types 1, 0, + and -, the psi operators, the split of a
 * character of P_n into its four components, degree reconstruction from the
 * values on z_0, z_1, z_2, and the checks built on these.
 */
#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "orthochar/chartab.hpp"
#include "orthochar/check.hpp"
#include "orthochar/exact.hpp"
#include "orthochar/ortho.hpp"
#include "orthochar/symbols.hpp"

namespace orthochar {

enum class PType { One = 0, Zero = 1, Plus = 2, Minus = 3 };

constexpr std::array<PType, 4> kPTypes{PType::One, PType::Zero, PType::Plus, PType::Minus};

/** "1", "0", "+" or "-". */
std::string ptype_symbol(PType t);
/** 0 for Type 0, +1 and -1 for Types + and -; Type 1 has no eps. */
int ptype_eps(PType t);

/** An irreducible character of P_n, named by its type and payload. */
struct IrrPLabel {
  PType type = PType::One;
  /** Index of the payload in payload_irr(type). */
  int payload = 0;
  /** "1psi[...]", "0psi[...]", "+psi[...]" or "-psi[...]". */
  std::string name;
};

struct IrrPEntry {
  IrrPLabel label;
  ClassFunction chi;
};

/** The four components of a character of P_n. */
struct ComponentSplit {
  /** The subcharacters 1chi, 0chi, +chi, -chi on P. */
  std::array<ClassFunction, 4> parts;
  /** The payload characters theta^eps on L, P_{n-2}, L^+ and L^-. */
  std::array<ClassFunction, 4> payloads;
  /** theta^eps(1). */
  std::array<Rational, 4> degrees;
  /** Multiplicities of the irreducibles of P in the order of irr(). */
  std::vector<int> multiplicities;
};

class CliffordContext {
 public:
  /** Built once per context; requires n >= 3 and an enumerable P. */
  static const CliffordContext& of(const OrthoContext& ctx);

  const OrthoContext& context() const { return *ctx_; }
  /** Types occurring at this n: 1 and + for n = 3, all four for n >= 5. */
  bool has_type(PType t) const;
  /** L, the child P_{n-2}, L^+ or L^-. */
  const FiniteMatrixGroup& payload_group(PType t) const;
  const std::vector<ClassFunction>& payload_irr(PType t) const;
  const std::vector<std::string>& payload_names(PType t) const;
  /** Index of a payload by name; throws std::invalid_argument if absent. */
  int payload_index(PType t, const std::string& name) const;
  /** Sum of the named payload irreducibles. */
  ClassFunction payload_sum(PType t, const std::vector<std::string>& names) const;

  /** Irr(P_n), Type 1 first, then 0, + and -. */
  const std::vector<IrrPEntry>& irr() const { return irr_; }
  /** Index into irr() of the character with the given type and payload. */
  int irr_index(PType t, int payload) const;

  /** ^1psi_sigma = Infl_L^P sigma. */
  ClassFunction psi1(const ClassFunction& sigma) const;
  /** ^0psi_mu for a character mu of P_{n-2}. */
  ClassFunction psi0(const ClassFunction& mu) const;
  /** ^eps psi_theta for a character theta of L^eps. */
  ClassFunction psi_pm(int eps, const ClassFunction& theta) const;
  /** Dispatches on the type; additive in the payload. */
  ClassFunction psi(PType t, const ClassFunction& payload) const;

  /** sigma = chi_l x 1 on L for a unipotent label l of SO_{n-2}(q). */
  ClassFunction unipotent_sigma(const UnipotentLabel& child_label) const;
  /** St_L. */
  ClassFunction steinberg_l() const;

  /** Split of a character of P; throws std::runtime_error unless it is a character. */
  ComponentSplit component_split(const ClassFunction& chi) const;
  /** Values at z_0, z_1, z_2 (n >= 5). */
  std::array<Cyclotomic, 3> values_on_z(const ClassFunction& chi) const;

  nlohmann::json irr_json() const;

 private:
  explicit CliffordContext(const OrthoContext& ctx);
  void build_payloads();
  void name_lpm_n5();
  const std::vector<int>& fusion_to_p(int eps) const;

  const OrthoContext* ctx_;
  std::array<const FiniteMatrixGroup*, 4> payload_groups_{};
  std::array<std::vector<ClassFunction>, 4> payload_irr_;
  std::array<std::vector<std::string>, 4> payload_names_;
  std::vector<IrrPEntry> irr_;
  std::map<std::pair<int, int>, int> irr_index_;
  mutable std::mutex mu_;
  mutable std::map<int, std::vector<int>> fusion_;
};

/** The 4 x 4 matrix whose columns are (psi(1), psi(z_0), psi(z_1), psi(z_2)) per unit payload degree. */
std::array<std::array<Rational, 4>, 4> values_matrix(int m, int q);
/** M^{-1} (chi(1), chi(z_0), chi(z_1), chi(z_2)); throws std::domain_error for a non-integral result. */
std::array<Rational, 4> degrees_from_values(const std::array<Rational, 4>& values, int m, int q);
/** Closed form of det(M): q^{4m-2} for odd q, q^{5m-3}/2 for even q. */
Rational values_matrix_det_formula(int m, int q);
/** det(M) by elimination. */
Rational values_matrix_det(int m, int q);

/** Count, orthogonality, irreducibility, degree formulas and sum of squared degrees. */
CheckList check_irr_parabolic(const OrthoContext& ctx);
/** Values of every Type 0 and Type +- irreducible on z_0, z_1, z_2 against M. */
CheckList check_values_on_z(const OrthoContext& ctx);
/** component_split against degrees_from_values on Irr(G) restricted to P. */
CheckList check_component_degrees(const OrthoContext& ctx);
/** (^s nu) induced from RQ_K in all five cases (a) to (e), over all admissible payloads. */
CheckList check_rqk_induction(const OrthoContext& ctx, const std::string& parts = "abcde");
/** Mackey formula for R_L^G(sigma) restricted to P, over unipotent sigma. */
CheckList check_lgp(const OrthoContext& ctx);
/** Ind_L^P sigma for every sigma = chi x 1. */
CheckList check_levi_induction(const OrthoContext& ctx);
/** St_G restricted to P by the four-term formula against the identified St_G. */
CheckList check_steinberg_restriction(const OrthoContext& ctx);
/** St_G restricted to P, computed by the four-term formula. */
ComponentSplit steinberg_restriction(const OrthoContext& ctx);

}  // namespace orthochar
