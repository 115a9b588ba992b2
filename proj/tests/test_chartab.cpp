/**
 * @file test_chartab.cpp
 * @brief Class functions, induction and restriction, and Dixon-Schneider tables.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "orthochar/chartab.hpp"
#include "orthochar/clifford.hpp"
#include "orthochar/ortho.hpp"
#include "orthochar/verify.hpp"

using namespace orthochar;

namespace {

std::vector<long> degrees(const CharacterTable& t) {
  std::vector<long> d;
  for (size_t i = 0; i < t.size(); ++i) d.push_back(t[i].degree().get_num().get_si());
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("cyclic group of order 4") {
  FieldPtr f = field_of_order(5);
  Mat x = mat_identity(1);
  x(0, 0) = 2;
  auto c4 = FiniteMatrixGroup::closure(f, 1, {x});
  CharacterTable t = character_table_uncached(*c4);
  REQUIRE(t.size() == 4);
  CHECK(t.verify().empty());
  bool has_i = false;
  for (size_t k = 0; k < 4; ++k) {
    CHECK(t[k].degree() == 1);
    for (const auto& v : t[k].values()) has_i |= v == Cyclotomic::zeta(4) || v == -Cyclotomic::zeta(4);
  }
  CHECK(has_i);
}

TEST_CASE("P_3(3) has degrees 1, 1, 2") {
  CharacterTable t = character_table(OrthoContext::get(3, 3)->P());
  CHECK(degrees(t) == std::vector<long>{1, 1, 2});
}

TEST_CASE("SO_5(2) table") {
  const FiniteMatrixGroup& g = OrthoContext::get(5, 2)->G();
  CharacterTable t = character_table(g);
  CHECK(t.size() == 11);
  CHECK(degrees(t) == std::vector<long>{1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16});
  CHECK(t.verify().empty());
  for (size_t i = 0; i < t.size(); ++i) CHECK(g.order() % t[i].degree().get_num().get_ui() == 0);
}

TEST_CASE("inner products") {
  auto ctx = OrthoContext::get(5, 2);
  const FiniteMatrixGroup& g = ctx->G();
  CharacterTable t = character_table(g);
  ClassFunction one = ClassFunction::trivial(&g);
  CHECK(inner_product(one, one) == 1);
  ClassFunction reg = ClassFunction::regular(&g);
  for (size_t i = 0; i < t.size(); ++i) CHECK(inner_product(reg, t[i]) == t[i].degree());
  ClassFunction ind = induce(ClassFunction::trivial(&ctx->P()), g);
  CHECK(ind.degree() == 15);
  CHECK(inner_product(ind, one) == 1);
  CHECK_THROWS(inner_product(one, ClassFunction::trivial(&ctx->P())));
}

TEST_CASE("induction and restriction") {
  auto ctx = OrthoContext::get(5, 2);
  const FiniteMatrixGroup& g = ctx->G();
  CharacterTable t = character_table(g);
  for (size_t i = 0; i < t.size(); ++i) CHECK(induce(t[i], g) == t[i]);
  auto triv = subgroup_by_predicate(g, [](const Mat& x) { return x == mat_identity(5); });
  CHECK(induce(ClassFunction::trivial(triv.get()), g) == ClassFunction::regular(&g));
  CHECK(restrict_to(ClassFunction::trivial(&g), ctx->P()) == ClassFunction::trivial(&ctx->P()));
  CHECK(is_irreducible(t[0]));
  CHECK_FALSE(is_irreducible(t[0] + t[0]));
}

TEST_CASE("conjugating St_L by t fixes it") {
  auto ctx = OrthoContext::get(5, 3);
  const auto& cc = CliffordContext::of(*ctx);
  ClassFunction st = cc.steinberg_l();
  CHECK(conjugate(st, ctx->L(), ctx->t()) == st);
}

TEST_CASE("Frobenius reciprocity and orthogonality") {
  CHECK(all_ok(check_frobenius(5, 2, 3u, 30)));
  CHECK(all_ok(check_frobenius(5, 3, 4u, 30)));
  CHECK(all_ok(check_table_orthogonality(5, 2)));
  CHECK(all_ok(check_table_orthogonality(5, 3)));
}

TEST_CASE("serialization round trip") {
  const FiniteMatrixGroup& g = OrthoContext::get(5, 2)->G();
  CharacterTable t = character_table(g);
  CharacterTable back = CharacterTable::from_json(&g, t.to_json());
  REQUIRE(back.size() == t.size());
  for (size_t i = 0; i < t.size(); ++i) CHECK(back[i] == t[i]);
}
