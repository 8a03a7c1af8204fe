#include <doctest.h>

#include <random>

#include "orderlab/rational.hpp"

using namespace orderlab;

TEST_CASE("rationals stay reduced with positive denominators") {
  Rational r(6, -4);
  CHECK(r.numerator() == Int(-3));
  CHECK(r.denominator() == Int(2));
  CHECK(r.str() == "-3/2");

  std::mt19937_64 rng(7);
  Rational acc(1);
  for (int i = 0; i < 200; ++i) {
    long n = static_cast<long>(rng() % 41) - 20;
    long d = static_cast<long>(rng() % 20) + 1;
    Rational step(n, (rng() & 1) ? d : -d);
    switch (rng() % 3) {
      case 0: acc += step; break;
      case 1: acc -= step; break;
      default: acc *= step; break;
    }
    Int g = gcd(acc.numerator(), acc.denominator());
    CHECK(g == Int(1));
    CHECK(sgn(acc.denominator()) > 0);
  }
}

TEST_CASE("parsing accepts integers and p/q strings") {
  CHECK(Rational::parse("42") == Rational(42));
  CHECK(Rational::parse("-7/21") == Rational(-1, 3));
  CHECK(Rational::parse("3/6").str() == "1/2");
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("floor and fractional part") {
  CHECK(Rational(7, 2).floor() == Int(3));
  CHECK(Rational(-7, 2).floor() == Int(-4));
  CHECK(Rational(-7, 2).fractionalPart() == Rational(1, 2));
  CHECK(Rational(3).fractionalPart() == Rational(0));
}

TEST_CASE("arithmetic identities hold on random values") {
  std::mt19937_64 rng(11);
  auto draw = [&]() {
    long n = static_cast<long>(rng() % 2001) - 1000;
    long d = static_cast<long>(rng() % 50) + 1;
    return Rational(n, d);
  };
  for (int i = 0; i < 100; ++i) {
    Rational a = draw(), b = draw(), c = draw();
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + b - b == a);
    if (!b.isZero()) CHECK(a / b * b == a);
  }
}
