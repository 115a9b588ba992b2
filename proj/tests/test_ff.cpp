/**
 * @file test_ff.cpp
 * @brief Finite fields: canonical moduli, nu, the additive character and the field axioms.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orthochar/ff.hpp"
#include "orthochar/verify.hpp"

using namespace orthochar;

TEST_CASE("prime fields and small extensions") {
  auto f2 = field_make(2, 1);
  CHECK(f2->q() == 2);
  CHECK(f2->modulus() == std::vector<int>{0, 1});
  auto f4 = field_make(2, 2);
  CHECK(f4->q() == 4);
  CHECK(f4->modulus() == std::vector<int>{1, 1, 1});
  auto f5 = field_make(5, 1);
  CHECK(f5->q() == 5);
  CHECK(f5->mul(2, 3) == 1);
  CHECK(field_of_order(9)->p() == 3);
  CHECK(field_of_order(8)->k() == 3);
}

TEST_CASE("invalid fields are rejected") {
  CHECK_THROWS_AS(field_make(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(field_make(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(field_make(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(field_of_order(6), std::invalid_argument);
  CHECK_THROWS_AS(field_of_order(17), std::invalid_argument);
  CHECK_THROWS(field_of_order(3)->inv(0));
}

TEST_CASE("nu makes X^2 + X + nu irreducible") {
  CHECK(find_nu(*field_of_order(2)).code() == 1);
  CHECK(find_nu(*field_of_order(3)).code() == 2);
  CHECK(find_nu(*field_of_order(5)).code() == 1);
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    const Field& f = *field_of_order(q);
    const uint8_t nu = find_nu(f).code();
    for (int x = 0; x < q; ++x) CHECK(f.add(f.add(f.mul(x, x), x), nu) != 0);
  }
}

TEST_CASE("additive character") {
  const Field& f2 = *field_of_order(2);
  CHECK(additive_char(f2).value(1) == Cyclotomic(-1));
  CHECK(additive_char(f2).value(0) == Cyclotomic(1));
  const Field& f4 = *field_of_order(4);
  uint8_t omega = 2;
  CHECK(f4.add(f4.mul(omega, omega), f4.add(omega, 1)) == 0);
  CHECK(additive_char(f4).value(omega) == Cyclotomic(-1));
  for (int q : {3, 4, 5, 8, 9}) {
    const Field& f = *field_of_order(q);
    AdditiveCharacter xi = additive_char(f);
    Cyclotomic sum(0);
    for (int x = 0; x < q; ++x) {
      sum += xi.value(x);
      for (int y = 0; y < q; ++y) CHECK(xi.value(f.add(x, y)) == xi.value(x) * xi.value(y));
    }
    CHECK(sum.is_zero());
  }
}

TEST_CASE("squares and the canonical non-square") {
  CHECK(field_of_order(3)->smallest_nonsquare() == 2);
  CHECK(field_of_order(5)->smallest_nonsquare() == 2);
  CHECK(field_of_order(4)->smallest_nonsquare() == 0);
  CHECK(field_of_order(7)->is_square(2));
  CHECK_FALSE(field_of_order(7)->is_square(3));
}

TEST_CASE("field axioms hold exhaustively") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    CAPTURE(q);
    CHECK(all_ok(check_field_axioms(q)));
  }
}
