#include "doctest.h"

#include <limits>
#include <random>

#include "superw/rational.hpp"

using superw::Rational;

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(-4, 6).str() == "-2/3");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("rational promotion to big values and back") {
  Rational big = std::numeric_limits<long long>::max();
  Rational sq = big * big;
  CHECK(sq / big == big);
  CHECK((sq - sq).is_zero());
  CHECK(sq > big);
  Rational r = pow(Rational(3, 2), 90);
  CHECK(r.str() == (pow(Rational(3), 90) / pow(Rational(2), 90)).str());
  CHECK((r / r).is_one());
}

TEST_CASE("rational arithmetic agrees with mpq") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> dist(-2'000'000'000'000LL, 2'000'000'000'000LL);
  for (int trial = 0; trial < 2000; ++trial) {
    long long a = dist(rng), b = dist(rng) | 1, c = dist(rng), d = dist(rng) | 1;
    Rational x(a, b), y(c, d);
    mpq_class qx = x.to_mpq(), qy = y.to_mpq();
    CHECK((x + y).to_mpq() == qx + qy);
    CHECK((x - y).to_mpq() == qx - qy);
    CHECK((x * y).to_mpq() == qx * qy);
    if (!y.is_zero()) CHECK((x / y).to_mpq() == qx / qy);
    CHECK(((x < y) == (qx < qy)));
    CHECK((x + y) == Rational(qx + qy));
  }
}
