/**
 * @file test_matgrp.cpp
 * @brief Matrices, quadratic forms, closure, classes and fusion.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "orthochar/matgrp.hpp"
#include "orthochar/ortho.hpp"
#include "orthochar/verify.hpp"

using namespace orthochar;

namespace {

Vec unit(int dim, int i) {
  Vec v(dim, 0);
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("quadratic forms") {
  FieldPtr f3 = field_of_order(3);
  QuadraticForm q5(f3.get(), QuadraticForm::Kind::Odd, 5);
  CHECK(quad_eval(q5, unit(5, 2)) == 1);
  CHECK(quad_eval(q5, Vec(5, 0)) == 0);
  QuadraticForm q4m(f3.get(), QuadraticForm::Kind::Minus, 4, find_nu(*f3).code());
  CHECK(quad_eval(q4m, unit(4, 2)) == find_nu(*f3).code());
  CHECK_THROWS_AS(quad_eval(q5, Vec(4, 0)), std::invalid_argument);
}

TEST_CASE("polar form matches the Gram matrix") {
  for (int q : {2, 3, 4}) {
    FieldPtr f = field_of_order(q);
    for (auto kind : {QuadraticForm::Kind::Odd, QuadraticForm::Kind::Plus, QuadraticForm::Kind::Minus}) {
      const int dim = kind == QuadraticForm::Kind::Odd ? 3 : 4;
      QuadraticForm Q(f.get(), kind, dim, find_nu(*f).code());
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
          Vec v = unit(dim, i), w = unit(dim, j), s(dim, 0);
          for (int k = 0; k < dim; ++k) s[k] = f->add(v[k], w[k]);
          const uint8_t polar = f->sub(f->sub(Q.eval(s), Q.eval(v)), Q.eval(w));
          CHECK(Q.gram()(i, j) == polar);
        }
    }
  }
}

TEST_CASE("isometries") {
  auto ctx = OrthoContext::get(5, 3);
  const QuadraticForm& Q = ctx->form();
  CHECK(is_isometry(Q, mat_identity(5)));
  CHECK(is_isometry(Q, ctx->s()));
  Mat x = mat_identity(5);
  x(0, 1) = 1;
  CHECK_FALSE(is_isometry(Q, x));
}

TEST_CASE("isometry test agrees with exhaustive evaluation") {
  auto ctx = OrthoContext::get(3, 3);
  const Field& f = ctx->field();
  const QuadraticForm& Q = ctx->form();
  int agree = 0, total = 0;
  for (int a = 0; a < 27; ++a)
    for (int b = 0; b < 9; ++b) {
      Mat x = mat_identity(3);
      x(0, 0) = a % 3, x(0, 1) = (a / 3) % 3, x(0, 2) = a / 9;
      x(1, 0) = b % 3, x(1, 2) = b / 3;
      bool exhaustive = true;
      for (int v = 0; v < 27 && exhaustive; ++v) {
        Vec w{static_cast<uint8_t>(v % 3), static_cast<uint8_t>((v / 3) % 3), static_cast<uint8_t>(v / 9)};
        exhaustive = Q.eval(mat_apply(f, x, w)) == Q.eval(w);
      }
      ++total;
      agree += exhaustive == is_isometry(Q, x);
    }
  CHECK(agree == total);
}

TEST_CASE("order formulas") {
  CHECK(group_order_formula(OrderKind::SOOdd, 2, 2) == 720);
  CHECK(group_order_formula(OrderKind::SOOdd, 3, 2) == 1451520);
  CHECK(group_order_formula(OrderKind::GOMinus, 2, 2) == 120);
  CHECK(group_order_formula(OrderKind::GOPlus, 0, 5) == 1);
  CHECK(group_order_formula(OrderKind::SOOdd, 1, 2) == 6);
}

TEST_CASE("closure") {
  FieldPtr f = field_of_order(2);
  CHECK(FiniteMatrixGroup::closure(f, 3, {})->order() == 1);
  CHECK(OrthoContext::get(3, 2)->G().order() == 6);
  CHECK(OrthoContext::get(5, 2)->G().order() == 720);
  CHECK_THROWS_AS(FiniteMatrixGroup::closure(f, 5, OrthoContext::get(5, 2)->g_generators(), 100), std::length_error);
  auto gens = OrthoContext::get(5, 2)->g_generators();
  std::reverse(gens.begin(), gens.end());
  CHECK(same_elements(*FiniteMatrixGroup::closure(f, 5, gens), OrthoContext::get(5, 2)->G()));
}

TEST_CASE("conjugacy classes") {
  CHECK(OrthoContext::get(5, 2)->U().num_classes() == 8);
  CHECK(OrthoContext::get(3, 3)->P().order() == 6);
  CHECK(OrthoContext::get(3, 3)->P().num_classes() == 3);
  const FiniteMatrixGroup& g = OrthoContext::get(5, 2)->G();
  CHECK(g.num_classes() == 11);
  uint64_t total = 0;
  for (const auto& c : g.classes()) {
    CHECK(g.order() % c.size == 0);
    CHECK(c.size * c.centralizer == g.order());
    CHECK(c.power_class(1) == static_cast<int>(&c - g.classes().data()));
    total += c.size;
  }
  CHECK(total == g.order());
}

TEST_CASE("class fusion") {
  auto ctx = OrthoContext::get(5, 2);
  auto fu = class_fusion(ctx->U(), ctx->P());
  CHECK(std::set<int>(fu.begin(), fu.end()).size() == 4);
  auto triv = subgroup_by_predicate(ctx->G(), [](const Mat& x) { return x == mat_identity(5); });
  CHECK(class_fusion(*triv, ctx->G()) == std::vector<int>{ctx->G().class_of(mat_identity(5))});
  std::set<int> zc;
  for (int j = 0; j < 3; ++j) zc.insert(ctx->G().class_of(ctx->z(j)));
  CHECK(zc.size() == 3);
  CHECK_THROWS_AS(class_fusion(ctx->G(), ctx->P()), std::invalid_argument);
}

TEST_CASE("subgroups") {
  auto c2 = OrthoContext::get(5, 2);
  auto stab = subgroup_by_predicate(c2->G(), [](const Mat& x) {
    for (int i = 1; i < 5; ++i)
      if (x(i, 0) != 0) return false;
    return true;
  });
  CHECK(stab->order() == 48);
  CHECK(c2->U().is_abelian());
  auto c3 = OrthoContext::get(5, 3);
  CHECK(c3->Lprime().order() == 24);
  CHECK_THROWS_AS(subgroup_by_predicate(c2->G(), [](const Mat& x) { return x != mat_identity(5); }), std::runtime_error);
}

TEST_CASE("orthogonal groups of even dimension") {
  CHECK(all_ok(check_go_orders(1, 2)));
  CHECK(all_ok(check_go_orders(2, 2)));
  CHECK(all_ok(check_go_orders(2, 3)));
  CHECK(go_even_group(2, 2, false)->order() == 120);
}

TEST_CASE("serialization") {
  const FiniteMatrixGroup& g = OrthoContext::get(3, 2)->G();
  nlohmann::json j = g.to_json();
  CHECK(j["order"] == 6);
  CHECK(Mat::from_key_string(g.element(3).key_string(), 3) == g.element(3));
}
