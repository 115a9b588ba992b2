/**
 * @file test_symbols.cpp
 * @brief Symbols, bipartitions, degree polynomials, branching and identification.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "orthochar/symbols.hpp"

using namespace orthochar;

namespace {

std::vector<std::string> strs(std::vector<UnipotentLabel> v) {
  std::vector<std::string> s;
  for (const auto& l : v) s.push_back(l.str());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("symbol and bipartition") {
  CHECK(symbol_to_label(SymbolB::parse("(2 / -)")).str() == "[2,-,1]");
  CHECK(symbol_to_label(SymbolB::parse("(0 1 2 / 1 2)")).str() == "[-,1^2,1]");
  UnipotentLabel l = symbol_to_label(SymbolB::parse("(0 1 2 3 / 1 2 3)"));
  CHECK(l.str() == "[-,1^3,1]");
  CHECK(l.rank() == 3);
  CHECK(l.defect == 1);
  CHECK(label_to_symbol(UnipotentLabel::parse("[-,-,3]")).defect() == 3);
  CHECK(UnipotentLabel::parse("[1²,−,1]").str() == "[1^2,-,1]");
  CHECK(UnipotentLabel::parse("[2 1,-,1]").str() == "[21,-,1]");
  CHECK_THROWS_AS(SymbolB::parse("(1 1 / -)").validate(), std::invalid_argument);
  CHECK_THROWS_AS(UnipotentLabel::parse("[1,1"), std::invalid_argument);
  CHECK(all_ok(check_symbol_tables()));
}

TEST_CASE("degree polynomials") {
  for (int q : {2, 3, 4, 5}) CHECK(unipotent_degree(UnipotentLabel::parse("[-,1^2,1]"), q) == q * q * q * q);
  CHECK(unipotent_degree(UnipotentLabel::parse("[1,2,1]"), 2) == 84);
  CHECK(unipotent_degree(UnipotentLabel::parse("[3,-,1]"), 7) == 1);
  CHECK(Poly::phi(3).eval(2) == 7);
  CHECK((Poly::half() * Poly::q() * (Poly::q() - Poly(1)).pow(2)).eval(3) == 6);
  CHECK(unipotent_rows(5).size() == 6);
  CHECK(unipotent_rows(7).size() == 12);
  CHECK_THROWS_AS(unipotent_row(UnipotentLabel::parse("[4,-,1]")), std::invalid_argument);
}

TEST_CASE("Harish-Chandra branching") {
  CHECK(strs(hc_branch(UnipotentLabel::parse("[1,-,1]"))) ==
        strs({UnipotentLabel::parse("[2,-,1]"), UnipotentLabel::parse("[1^2,-,1]"), UnipotentLabel::parse("[1,1,1]")}));
  CHECK(strs(hc_branch(UnipotentLabel::parse("[-,1,1]"))) ==
        strs({UnipotentLabel::parse("[1,1,1]"), UnipotentLabel::parse("[-,1^2,1]"), UnipotentLabel::parse("[-,2,1]")}));
  CHECK(strs(hc_branch(UnipotentLabel::parse("[-,-,3]"))) ==
        strs({UnipotentLabel::parse("[1,-,3]"), UnipotentLabel::parse("[-,1,3]")}));
  CHECK(all_ok(check_hc_branch_labels()));
}

TEST_CASE("identification at (5,2)") {
  auto ctx = OrthoContext::get(5, 2);
  const auto& u = UnipotentCharacters::of(*ctx);
  const auto& g = ctx->G();
  CHECK(u.character(trivial_label(2)) == ClassFunction::trivial(&g));
  const ClassFunction& cusp = u.character(UnipotentLabel::parse("[-,-,3]"));
  CHECK(cusp.degree() == 1);
  CHECK(cusp.at(ctx->z(0)) == Cyclotomic(-1));
  CHECK(cusp.at(ctx->z(1)) == Cyclotomic(-1));
  CHECK(cusp.at(ctx->z(2)) == Cyclotomic(1));
  CHECK(all_ok(check_unipotent(*ctx)));
}

TEST_CASE("identification at (5,3)") {
  auto ctx = OrthoContext::get(5, 3);
  const auto& u = UnipotentCharacters::of(*ctx);
  const ClassFunction& chi = u.character(UnipotentLabel::parse("[1^2,-,1]"));
  CHECK(chi.degree() == 15);
  CHECK(chi.at(ctx->z(0)) == Cyclotomic(-3));
  CHECK(chi.at(ctx->z(1)) == Cyclotomic(3));
  CHECK(chi.at(ctx->z(2)) == Cyclotomic(0));
  CHECK(all_ok(check_unipotent(*ctx)));
}
