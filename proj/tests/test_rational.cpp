#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hp/rational.hpp"

using hp::Rational;

TEST_CASE("reduction and canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0).denominator() == 1);
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(-5, 3).str() == "-5/3");
  CHECK(Rational(4).str() == "4");
}

TEST_CASE("parse") {
  CHECK(Rational::parse("5/3") == Rational(5, 3));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), hp::Error);
  CHECK_THROWS_AS(Rational::parse("abc"), hp::Error);
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), hp::Error);
  CHECK_THROWS_AS(Rational(0).inverse(), hp::Error);
}

TEST_CASE("pow and comparisons") {
  CHECK(Rational(1, 2).pow(2) == Rational(1, 4));
  CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
  CHECK(Rational(0).pow(4) == Rational(0));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) < Rational(0));
}

TEST_CASE("field axioms on random operands") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 12);
  auto draw = [&] { return Rational(num(rng), den(rng)); };
  for (int trial = 0; trial < 200; ++trial) {
    Rational a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rational(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
  }
}

TEST_CASE("integer helpers") {
  CHECK(hp::factorial(5) == 120);
  CHECK(hp::binomial(6, 2) == 15);
}
