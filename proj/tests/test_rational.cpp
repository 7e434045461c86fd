#include <random>
#include <sstream>

#include "doctest.h"
#include "sumrules/errors.hpp"
#include "sumrules/rational.hpp"

using namespace sumrules;

namespace {

// Deterministic random rationals for property tests.
Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 60);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

}  // namespace

TEST_CASE("parsing accepts integers, fractions, and exact decimals") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-2/6") == Rational(-1, 3));
  CHECK(Rational::parse("1.5") == Rational(3, 2));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("1.5e-3") == Rational(3, 2000));
  CHECK(Rational::parse("2e3") == Rational(2000));
  CHECK(Rational::parse("-0.5e1") == Rational(-5));
}

TEST_CASE("parsing rejects malformed input") {
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("1/ 2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), ParseError);
}

TEST_CASE("canonical form and printing") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(8, 2).str() == "4");
  CHECK(Rational(0, 5).str() == "0");
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), Error);
  std::ostringstream ss;
  ss << Rational(22, 7);
  CHECK(ss.str() == "22/7");
}

TEST_CASE("field axioms hold on random samples") {
  std::mt19937 rng(20240817);
  for (int i = 0; i < 200; ++i) {
    const Rational x = random_rational(rng);
    const Rational y = random_rational(rng);
    const Rational z = random_rational(rng);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + Rational(0) == x);
    CHECK(x * Rational(1) == x);
    CHECK(x - x == Rational(0));
    if (!y.is_zero()) CHECK(x / y * y == x);
  }
}

TEST_CASE("ordering is total and consistent with arithmetic") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational x = random_rational(rng);
    const Rational y = random_rational(rng);
    CHECK(((x < y) + (x == y) + (y < x)) == 1);
    if (x < y) CHECK((y - x).sign() == 1);
  }
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(abs(Rational(-5, 3)) == Rational(5, 3));
}

TEST_CASE("integer extraction") {
  CHECK(Rational(6, 3).is_integer());
  CHECK_FALSE(Rational(7, 3).is_integer());
  CHECK(to_integer(Rational(42)) == Integer(42));
  CHECK_THROWS_AS(to_integer(Rational(1, 2), "test"), InternalNonInteger);
}

TEST_CASE("floor and ceiling") {
  CHECK(Rational(7, 2).floor() == Integer(3));
  CHECK(Rational(7, 2).ceil() == Integer(4));
  CHECK(Rational(-7, 2).floor() == Integer(-4));
  CHECK(Rational(-7, 2).ceil() == Integer(-3));
  CHECK(Rational(5).floor() == Integer(5));
  CHECK(Rational(5).ceil() == Integer(5));
}

TEST_CASE("powers") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(-2).pow(4) == Rational(16));
  CHECK(Rational(5, 7).pow(0) == Rational(1));
}

TEST_CASE("binomial coefficients satisfy the Pascal recurrence") {
  CHECK(binomial(0, 0) == Integer(1));
  CHECK(binomial(5, 7) == Integer(0));
  CHECK(binomial(52, 5) == Integer(2598960));
  for (unsigned long n = 1; n <= 60; ++n) {
    for (unsigned long k = 1; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("rising products compose multiplicatively") {
  CHECK(rising_product(Rational(1, 2), 1) == Rational(1, 2));
  // (1/2)(3/2)(5/2) = 15/8
  CHECK(rising_product(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(rising_product(Rational(3), 4) == Rational(3 * 4 * 5 * 6));
  std::mt19937 rng(99);
  for (int i = 0; i < 50; ++i) {
    const Rational x = random_rational(rng);
    const unsigned long j = 1 + (rng() % 5);
    const unsigned long k = 1 + (rng() % 5);
    // rising(x, j + k) = rising(x, j) * rising(x + j, k)
    CHECK(rising_product(x, j + k) ==
          rising_product(x, j) * rising_product(x + Rational(Integer(j)), k));
  }
}

TEST_CASE("floor_sqrt is the exact integer square root of the floor") {
  CHECK(floor_sqrt(Rational(0)) == Integer(0));
  CHECK(floor_sqrt(Rational(1)) == Integer(1));
  CHECK(floor_sqrt(Rational(8)) == Integer(2));
  CHECK(floor_sqrt(Rational(9)) == Integer(3));
  CHECK(floor_sqrt(Rational(99, 10)) == Integer(3));
  CHECK(floor_sqrt(Rational(101, 100)) == Integer(1));
  std::mt19937 rng(4242);
  std::uniform_int_distribution<long> num(0, 100000);
  std::uniform_int_distribution<long> den(1, 1000);
  for (int i = 0; i < 300; ++i) {
    const Rational x(Integer(num(rng)), Integer(den(rng)));
    const Integer r = floor_sqrt(x);
    CHECK(Rational(Integer(r * r)) <= x);
    CHECK(x < Rational(Integer((r + 1) * (r + 1))));
  }
}
