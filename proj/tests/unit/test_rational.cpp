#include <doctest.h>

#include <cmath>

#include "delzant/rational.hpp"

using namespace delzant;

TEST_CASE("rational literals parse to lowest terms") {
  CHECK(parse_rational("4") == 4);
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("+3") == 3);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK(to_string(parse_rational("0/7")) == "0");
}

TEST_CASE("malformed rational literals are rejected") {
  for (const char* bad : {"", "1/", "/2", "1/0", "1/-2", "1.5", "a", "1/2/3", " 1", "--1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("continued-fraction approximation") {
  CHECK(approximate(0.5) == Rational(1, 2));
  CHECK(approximate(-0.75) == Rational(-3, 4));
  CHECK(approximate(3.141592653589793, 1000) == Rational(355, 113));
  CHECK(approximate(3.141592653589793, 100) == Rational(311, 99));
  const Rational r = approximate(1.0 / 3.0);
  CHECK(r == Rational(1, 3));
  const double x = 0.123456789012;
  const Rational a = approximate(x);
  CHECK(denominator(a) <= 1000000);
  // Best approximations satisfy |x - p/q| < 1 / (q * (max_den + 1)).
  CHECK(std::abs(to_double(a) - x) < 1.0 / (to_double(Rational(denominator(a))) * 1e6));
  CHECK_THROWS_AS(approximate(std::nan("")), DomainError);
}

TEST_CASE("exact binary conversion") {
  CHECK(exact_from_double(0.1) != Rational(1, 10));
  CHECK(to_double(exact_from_double(0.1)) == 0.1);
  CHECK(exact_from_double(0.375) == Rational(3, 8));
}
