/**
 * @file test_clifford.cpp
 * @brief Irr(P_n) by type, the psi operators, component splits and the induction identities.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orthochar/clifford.hpp"
#include "orthochar/symbols.hpp"

using namespace orthochar;

namespace {

std::array<int, 4> type_counts(const CliffordContext& cc) {
  std::array<int, 4> k{};
  for (const auto& e : cc.irr()) ++k[static_cast<int>(e.label.type)];
  return k;
}

std::string first_with_prefix(const CliffordContext& cc, PType t, const std::string& prefix) {
  for (const auto& nm : cc.payload_names(t))
    if (nm.rfind(prefix, 0) == 0) return nm;
  return "";
}

}  // namespace

TEST_CASE("Irr(P_5(2))") {
  const auto& cc = CliffordContext::of(*OrthoContext::get(5, 2));
  CHECK(cc.irr().size() == 10);
  CHECK(type_counts(cc) == std::array<int, 4>{3, 2, 2, 3});
  Rational sum = 0;
  for (const auto& e : cc.irr()) sum += e.chi.degree() * e.chi.degree();
  CHECK(sum == 48);
  const std::string xi = first_with_prefix(cc, PType::Minus, "Xi");
  REQUIRE(!xi.empty());
  CHECK(cc.psi_pm(-1, cc.payload_sum(PType::Minus, {xi})).degree() == 2);
}

TEST_CASE("Irr(P_5(3))") {
  auto ctx = OrthoContext::get(5, 3);
  const auto& cc = CliffordContext::of(*ctx);
  CHECK(cc.irr().size() == 22);
  CHECK(static_cast<int>(cc.irr().size()) == ctx->P().num_classes());
  for (const auto& e : cc.irr()) CHECK(is_irreducible(e.chi));
  const ClassFunction one_p3 = ClassFunction::trivial(&cc.payload_group(PType::Zero));
  CHECK(cc.psi0(one_p3).degree() == 8);
  CHECK(cc.psi_pm(1, ClassFunction::trivial(&ctx->Lpm(1))).degree() == 12);
  CHECK(all_ok(check_irr_parabolic(*ctx)));
}

TEST_CASE("psi is additive") {
  const auto& cc = CliffordContext::of(*OrthoContext::get(5, 3));
  for (PType t : kPTypes) {
    const auto& irr = cc.payload_irr(t);
    REQUIRE(irr.size() >= 2);
    CHECK(cc.psi(t, irr[0] + irr[1]) == cc.psi(t, irr[0]) + cc.psi(t, irr[1]));
  }
}

TEST_CASE("values on z_0, z_1, z_2") {
  const auto& c3 = CliffordContext::of(*OrthoContext::get(5, 3));
  for (const auto& mu : c3.payload_irr(PType::Zero))
    CHECK(c3.values_on_z(c3.psi0(mu))[0] == Cyclotomic(-mu.degree()));
  for (const auto& th : c3.payload_irr(PType::Plus)) CHECK(c3.values_on_z(c3.psi_pm(1, th))[2].is_zero());
  const auto& c2 = CliffordContext::of(*OrthoContext::get(5, 2));
  for (const auto& th : c2.payload_irr(PType::Plus))
    CHECK(c2.values_on_z(c2.psi_pm(1, th))[1] == Cyclotomic(-th.degree() * 3));
  CHECK(all_ok(check_values_on_z(*OrthoContext::get(5, 2))));
  CHECK(all_ok(check_values_on_z(*OrthoContext::get(5, 3))));
}

TEST_CASE("component splits") {
  auto c2 = OrthoContext::get(5, 2);
  const auto& u2 = UnipotentCharacters::of(*c2);
  ComponentSplit st = CliffordContext::of(*c2).component_split(
      restrict_to(u2.character(UnipotentLabel::parse("[-,1^2,1]")), c2->P()));
  CHECK(st.degrees == std::array<Rational, 4>{2, 2, 2, 2});
  auto c3 = OrthoContext::get(5, 3);
  const auto& cc = CliffordContext::of(*c3);
  ComponentSplit s = cc.component_split(
      restrict_to(UnipotentCharacters::of(*c3).character(UnipotentLabel::parse("[1,1,1]")), c3->P()));
  CHECK(s.degrees == std::array<Rational, 4>{4, 1, 1, 0});
  const auto& e = cc.irr()[3];
  ComponentSplit single = cc.component_split(e.chi);
  CHECK(single.parts[static_cast<int>(e.label.type)] == e.chi);
  CHECK_THROWS(cc.component_split(e.chi * Rational(1, 2)));
}

TEST_CASE("degrees from values") {
  CHECK(degrees_from_values({24, 6, 3, 0}, 2, 3) == std::array<Rational, 4>{4, 1, 1, 0});
  for (int q : {2, 3, 4, 5})
    for (int m : {2, 3}) CHECK(degrees_from_values({1, 1, 1, 1}, m, q) == std::array<Rational, 4>{1, 0, 0, 0});
  CHECK(values_matrix_det(2, 3) == 729);
  CHECK(values_matrix_det(2, 2) == 64);
  CHECK(values_matrix_det(3, 2) == values_matrix_det_formula(3, 2));
  CHECK_THROWS_AS(degrees_from_values({2, 1, 1, 0}, 2, 3), std::domain_error);
  CHECK(all_ok(check_component_degrees(*OrthoContext::get(5, 3))));
}

TEST_CASE("induction from RQ_K") {
  CHECK(all_ok(check_rqk_induction(*OrthoContext::get(5, 2))));
  CHECK(all_ok(check_rqk_induction(*OrthoContext::get(5, 3))));
  CHECK(all_ok(check_lgp(*OrthoContext::get(5, 3))));
}

TEST_CASE("Steinberg restriction") {
  for (int q : {2, 3}) {
    auto ctx = OrthoContext::get(5, q);
    CHECK(all_ok(check_levi_induction(*ctx)));
    CHECK(all_ok(check_steinberg_restriction(*ctx)));
    const auto& cc = CliffordContext::of(*ctx);
    const ClassFunction st = UnipotentCharacters::of(*ctx).character(steinberg_label(2));
    for (const auto& v : cc.values_on_z(restrict_to(st, ctx->P()))) CHECK(v.is_zero());
  }
}

TEST_CASE("JSON listing") {
  nlohmann::json j = CliffordContext::of(*OrthoContext::get(5, 2)).irr_json();
  CHECK(j.dump().find("psi[") != std::string::npos);
}
