#include <doctest.h>

#include "causalchop/rational.hpp"
#include "support/prng.hpp"

using namespace causalchop;

TEST_CASE("construction keeps lowest terms and positive denominator") {
  const Rational a(6, 8);
  CHECK(a.num() == 3);
  CHECK(a.den() == 4);
  const Rational b(3, -9);
  CHECK(b.num() == -1);
  CHECK(b.den() == 3);
  CHECK(Rational(0, 5).is_zero());
  CHECK_THROWS_AS(Rational(1, 0), ZeroDenominator);
}

TEST_CASE("parse and serialize round-trip") {
  CHECK(Rational::parse("-7/21").str() == "-1/3");
  CHECK(Rational::parse("42").str() == "42");
  CHECK(Rational::parse("0/9").str() == "0");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("a/b"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/"), ParseError);

  testsupport::Prng rng(7);
  for (int k = 0; k < 200; ++k) {
    const Rational r = rng.rational(1000, 1000);
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("field arithmetic against int64 cross-check") {
  testsupport::Prng rng(11);
  for (int k = 0; k < 200; ++k) {
    const long a = rng.int_in(-50, 50), b = rng.int_in(1, 50);
    const long c = rng.int_in(-50, 50), d = rng.int_in(1, 50);
    const Rational x(a, b), y(c, d);
    CHECK((x + y) == Rational(a * d + c * b, b * d));
    CHECK((x - y) == Rational(a * d - c * b, b * d));
    CHECK((x * y) == Rational(a * c, b * d));
    if (c != 0) CHECK((x / y) == Rational(a * d, b * c));
  }
  CHECK_THROWS_AS(Rational(1) / Rational(0), ZeroDenominator);
}

TEST_CASE("pow2") {
  CHECK(pow2(0) == Rational(1));
  CHECK(pow2(5) == Rational(32));
  CHECK(pow2(-3) == Rational(1, 8));
}
