/**
 * @file test_exact.cpp
 * @brief Rational and cyclotomic arithmetic.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orthochar/exact.hpp"
#include "orthochar/verify.hpp"

using namespace orthochar;

TEST_CASE("construction in canonical form") {
  Cyclotomic i = Cyclotomic::make(4, {{1, 1}});
  CHECK(i * i == Cyclotomic(-1));
  CHECK(Cyclotomic::make(3, {{0, 1}, {1, 1}, {2, 1}}).is_zero());
  Cyclotomic r = Cyclotomic::make(1, {{0, Rational(5, 3)}});
  CHECK(r.is_rational());
  CHECK(r.rational() == Rational(5, 3));
  CHECK(Cyclotomic::make(5, {{7, 1}}) == Cyclotomic::zeta(5, 2));
}

TEST_CASE("complex conjugation") {
  Cyclotomic i = Cyclotomic::zeta(4);
  CHECK(i.conj() == -i);
  CHECK(Cyclotomic(Rational(7, 2)).conj() == Cyclotomic(Rational(7, 2)));
  Cyclotomic real = Cyclotomic::zeta(5, 1) + Cyclotomic::zeta(5, 4);
  CHECK(real.conj() == real);
  Cyclotomic x = Cyclotomic::zeta(12, 1) + Cyclotomic::zeta(12, 5) * Rational(3);
  CHECK((x * x.conj()).conj() == x * x.conj());
}

TEST_CASE("lifting and reduction") {
  CHECK(Cyclotomic(-1).lift(6) == Cyclotomic(-1));
  CHECK(Cyclotomic::zeta(3).lift(6) == Cyclotomic::zeta(6, 2));
  Cyclotomic x = Cyclotomic::zeta(3) + Cyclotomic(Rational(1, 2));
  CHECK(x.lift(12).reduced().conductor() == 3);
  CHECK(x.lift(12).reduced() == x);
  CHECK(Cyclotomic::zeta(6, 2).reduced().conductor() == 3);
  CHECK_THROWS_AS(Cyclotomic::zeta(4).lift(6), std::invalid_argument);
}

TEST_CASE("mixed conductors and Galois action") {
  Cyclotomic a = Cyclotomic::zeta(3), b = Cyclotomic::zeta(4);
  CHECK((a * b).conductor() == 12);
  CHECK(a * b == Cyclotomic::zeta(12, 7));
  CHECK(Cyclotomic::zeta(5).galois(2) == Cyclotomic::zeta(5, 2));
  CHECK(Cyclotomic::zeta(5).galois(4) == Cyclotomic::zeta(5).conj());
  CHECK_THROWS_AS(Cyclotomic::zeta(3).rational(), std::domain_error);
}

TEST_CASE("serialization round trip") {
  Cyclotomic x = Cyclotomic::zeta(8, 3) * Rational(-2, 7) + Cyclotomic(1);
  nlohmann::json j = x.to_json();
  CHECK(j["N"] == 8);
  CHECK(Cyclotomic::from_json(j) == x);
}

TEST_CASE("rational parsing") {
  CHECK(rational_from_string("6/4") == Rational(3, 2));
  CHECK(rational_to_string(rational_from_string("-4/2")) == "-2");
  CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
}

TEST_CASE("ring axioms on random samples") {
  CHECK(all_ok(check_cyclotomic_axioms(1u, 300)));
  CHECK(all_ok(check_cyclotomic_axioms(99u, 300)));
}
