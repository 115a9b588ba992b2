/**
 * @file ortho.hpp
 * @brief SO_n(q) for odd n, its maximal parabolic P_n = U_n L_n, the orbit
 * representatives and inertia subgroups on Irr(U_n), distinguished Weyl
 * elements, and the subgroups R, Q_K, L_K, Q'_K, Y, P^pm_{n-3}.
 *
 * Coordinates follow the basis e_m, ..., e_1, e_0, e_1', ..., e_m', so index
 * i in [0, n) holds e_{m-i} for i < m, e_0 for i = m and e'_{i-m} for i > m.
 * Conjugates are written ^x H = x H x^{-1}.
 */
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "orthochar/check.hpp"
#include "orthochar/exact.hpp"
#include "orthochar/ff.hpp"
#include "orthochar/matgrp.hpp"

namespace orthochar {

using Vec = std::vector<uint8_t>;

/** Orbit data of L_n acting on Irr(U_n) = F_q^{n-2} (row vectors w, lambda_w(u(v)) = xi(w v)). */
struct OrbitData {
  /** Orbit sizes of 1_U, lambda^0, lambda^+, lambda^- (absent orbits have size 0). */
  std::vector<uint64_t> sizes;
  /** Number of orbits found on all of Irr(U). */
  int orbit_count = 0;
  /** Stabilizer orders in L of the four representatives. */
  std::vector<uint64_t> stabilizers;
};

class OrthoContext {
 public:
  /** Shared context for (n, q); contexts are built once per process. */
  static std::shared_ptr<const OrthoContext> get(int n, int q);

  int n() const { return n_; }
  int m() const { return m_; }
  int q() const { return f_->q(); }
  const Field& field() const { return *f_; }
  FieldPtr field_ptr() const { return f_; }
  std::string tag() const { return "n=" + std::to_string(n_) + ",q=" + std::to_string(q()); }
  /** Context for n - 2, or null when n = 1. */
  const OrthoContext* child() const { return child_.get(); }
  std::shared_ptr<const OrthoContext> child_ptr() const { return child_; }

  uint8_t nu() const { return nu_; }
  uint8_t nu_prime() const { return nu_prime_; }
  uint8_t nu_dprime() const { return nu_dprime_; }
  const Mat& b3() const { return b3_; }
  /** The transporter b_k for odd k >= 3. */
  Mat b(int k) const;
  const QuadraticForm& form() const { return form_; }
  /** Q'_k(v) = v_0^2 + v_1^2 + v_1 v_1' + nu v_1'^2 + sum_{j>=2} v_j v_j'. */
  uint8_t prime_form(const Vec& v) const;
  AdditiveCharacter xi() const { return AdditiveCharacter(f_.get()); }

  /** u_n(v) for v in F_q^{n-2}. */
  Mat u(const Vec& v) const;
  /** s_n(x, a) = diag(a, x, a^{-1}). */
  Mat s_elem(const Mat& x, uint8_t a) const;
  /** The Weyl representative s_j, 1 <= j <= m. */
  Mat weyl(int j) const;
  Mat s() const { return weyl(m_); }
  Mat t() const;
  /** r = s_{m-1}, for m >= 2. */
  Mat r() const { return weyl(m_ - 1); }
  /** Torus element diag(t_m, ..., t_1, 1, t_1^{-1}, ..., t_m^{-1}); ts[j-1] = t_j. */
  Mat torus(const Vec& ts) const;
  /** z_j = u(v_j), j = 0, 1, 2. */
  Mat z(int j) const;
  Vec z_vector(int j) const;

  /** Middle block on rows and columns 1..n-2. */
  Mat mid(const Mat& g) const { return mat_block(g, 1, n_ - 2); }
  /** Levi component s_n(mid(g), g_00) of g in P. */
  Mat levi(const Mat& g) const;
  /** v with g = u(v) levi(g), for g in P. */
  Vec u_vector(const Mat& g) const;
  bool in_P_shape(const Mat& g) const;
  bool in_L_shape(const Mat& g) const;

  /** Exponent e with lambda^eps(u(v)) = zeta_p^e; eps is 0, +1 or -1. */
  int lambda_exponent(int eps, const Vec& v) const;
  Cyclotomic lambda(int eps, const Vec& v) const;
  /** The row vector w with lambda^eps = lambda_w. */
  Vec lambda_row(int eps) const;

  std::vector<Mat> g_generators() const;
  /** True when |G_n| is within the enumeration bound. */
  bool g_enumerable() const;
  /** True when |P_n| is within the enumeration bound. */
  bool p_enumerable() const;

  const FiniteMatrixGroup& G() const;
  const FiniteMatrixGroup& P() const;
  const FiniteMatrixGroup& U() const;
  const FiniteMatrixGroup& L() const;
  const FiniteMatrixGroup& Lprime() const;
  const FiniteMatrixGroup& A() const;
  /** P~_{n-2} inside L. */
  const FiniteMatrixGroup& Ptilde() const;
  /** Child P_{n-2} embedded as diag(1, y, 1). */
  const FiniteMatrixGroup& Pchild_embedded() const;
  /** I^eps for eps in {0, +1, -1}. */
  const FiniteMatrixGroup& inertia(int eps) const;
  /** L^eps for eps in {+1, -1}. */
  const FiniteMatrixGroup& Lpm(int eps) const;
  /** The cyclic index-2 subgroup K^eps of L^eps (n = 5). */
  const FiniteMatrixGroup& Kpm(int eps) const;
  const FiniteMatrixGroup& R() const;
  const FiniteMatrixGroup& QK() const;
  const FiniteMatrixGroup& LK() const;
  const FiniteMatrixGroup& RQK() const;
  /** ^sU cap L = U_{n-2}. */
  const FiniteMatrixGroup& Un2() const;
  /** A_{n-2} = ^sA. */
  const FiniteMatrixGroup& An2() const;
  /** L~'_{n-2} = diag(I_2, x, I_2). */
  const FiniteMatrixGroup& Ltilde_prime() const;
  /** P^eps_{n-3} inside L^eps. */
  const FiniteMatrixGroup& Pm3(int eps) const;
  /** Q'_K = A x U_{n-2} P~_{n-4}, m >= 3. */
  const FiniteMatrixGroup& QprimeK() const;
  /** Y of the intersection lemma, m >= 3. */
  const FiniteMatrixGroup& Y() const;

  /** Orbits of L on Irr(U) by generator action; needs only L. */
  OrbitData orbit_structure() const;

  nlohmann::json dump() const;

 private:
  OrthoContext(int n, FieldPtr f, std::shared_ptr<const OrthoContext> child);
  const FiniteMatrixGroup& lazy(const std::string& key, const std::function<GroupPtr()>& make) const;
  void find_transporter();

  int n_, m_;
  FieldPtr f_;
  std::shared_ptr<const OrthoContext> child_;
  uint8_t nu_ = 0, nu_prime_ = 1, nu_dprime_ = 1;
  Mat b3_;
  QuadraticForm form_;
  mutable std::recursive_mutex mu_;
  mutable std::map<std::string, GroupPtr> groups_;
};

using ContextPtr = std::shared_ptr<const OrthoContext>;

/** Product set {x y : x in a, y in b}. */
std::vector<Mat> product_set(const Field& f, const std::vector<Mat>& a, const std::vector<Mat>& b);
/** Elements of g lying in x H x^{-1}. */
std::vector<Mat> conjugate_intersection(const FiniteMatrixGroup& g, const FiniteMatrixGroup& h, const Mat& x);
/** Element sets equal (as sets). */
bool same_set(std::vector<Mat> a, std::vector<Mat> b);

/** GO^pm_{2m}(q) in the fixed coordinates, by isometry search. */
GroupPtr go_even_group(int m, int q, bool plus);
/** Closed formula for |P_n|. */
uint64_t parabolic_order_formula(int m, int q);
/** Closed formula for |P~_{n-2}|. */
uint64_t ptilde_order_formula(int m, int q);
/** Closed formula for |L_n^pm|. */
uint64_t lpm_order_formula(int m, int q, int eps);

/** b_n transporter identity and nu'' conventions. */
CheckList check_context(const OrthoContext& ctx);
/** Orders of G, P, U, L, P~, L^pm against the closed formulas and P = U x| L. */
CheckList check_orders(const OrthoContext& ctx);
/** Four-orbit structure and inertia-group orders. */
CheckList check_orbits(const OrthoContext& ctx);
/** I^eps equals the stabilizer of lambda^eps in P. */
CheckList check_inertia(const OrthoContext& ctx);
/** Centralizer orders of z_0, z_1, z_2 and distinctness of their G-classes. */
CheckList check_z_classes(const OrthoContext& ctx);
/** {1, s, t} represent the P-P double cosets. */
CheckList check_double_cosets(const OrthoContext& ctx);
/** Identities for ^tP cap P, ^sP cap P, Q_K and R. */
CheckList check_parabolic_intersections(const OrthoContext& ctx);
/** ^{rs}(R Q'_K) cap U P~_{n-2} = (^rR) Y. */
CheckList check_r_intersections(const OrthoContext& ctx);
/** Middle row and column deletion is an isomorphism onto Sp_{2m}(q) for even q. */
CheckList check_sp_isomorphism(const OrthoContext& ctx);

}  // namespace orthochar
