#include <random>

#include "doctest.h"
#include "thinset/rational.hpp"

using thinset::OverflowError;
using thinset::Rational;

TEST_CASE("rationals normalize on construction") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, -7).den() == 1);
}

TEST_CASE("rational arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
}

TEST_CASE("rational comparisons cross-multiply exactly") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 3) > Rational(2));
  CHECK(Rational(2, 6) <= Rational(1, 3));
}

TEST_CASE("rational parse/print round trip") {
  for (const char* text : {"3", "-4", "1/2", "-7/9", "0"}) {
    Rational r = Rational::parse(text);
    CHECK(Rational::parse(r.to_string()) == r);
  }
  CHECK(Rational::parse("-4/6") == Rational(-2, 3));
}

TEST_CASE("rational overflow fails loudly") {
  Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, OverflowError);
  CHECK_THROWS_AS(Rational(1, 0), thinset::Error);
}

TEST_CASE("field identities hold on a random sample") {
  std::mt19937_64 rng(7);
  auto draw = [&]() {
    std::int64_t num = static_cast<std::int64_t>(rng() % 41) - 20;
    std::int64_t den = static_cast<std::int64_t>(rng() % 20) + 1;
    return Rational(num, den);
  };
  for (int i = 0; i < 200; ++i) {
    Rational a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("height drives the Q enumeration shells") {
  CHECK(Rational(0).height() == 0);
  CHECK(Rational(1).height() == 1);
  CHECK(Rational(-1).height() == 1);
  CHECK(Rational(1, 2).height() == 2);
  CHECK(Rational(3, 2).height() == 3);
  CHECK(Rational(-5).height() == 5);
}
