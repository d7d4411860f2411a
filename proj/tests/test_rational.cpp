#include <doctest.h>

#include "unavail/rational.hpp"

using namespace unavail;

TEST_CASE("parse fractions, integers and decimals exactly") {
  CHECK(parse_rational("1/3") == Rational(1, 3));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("-2.50") == Rational(-5, 2));
  CHECK(parse_rational(".5") == Rational(1, 2));
}

TEST_CASE("malformed rationals are rejected") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("."), std::invalid_argument);
}

TEST_CASE("round trip through text") {
  for (const char* s : {"0", "1", "-3", "1/3", "22/7", "-5/12"}) CHECK(to_string(parse_rational(s)) == s);
}

TEST_CASE("floor, ceil and pow") {
  CHECK(floor(Rational(7, 2)) == 3);
  CHECK(ceil(Rational(7, 2)) == 4);
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(ceil(Rational(-7, 2)) == -3);
  CHECK(ceil(Rational(4)) == 4);
  CHECK(pow(Rational(3, 2), 3) == Rational(27, 8));
  CHECK(pow(Rational(3, 2), -2) == Rational(4, 9));
  CHECK(pow(Rational(5), 0) == 1);
}

TEST_CASE("eps must be a unit fraction in (0,1]") {
  CHECK(Eps(Rational(1, 3)).inverse() == 3);
  CHECK(Eps(Rational(1)).one_plus() == 2);
  CHECK_THROWS_AS(Eps(Rational(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(Eps(Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(Eps(Rational(3, 2)), std::invalid_argument);
}

TEST_CASE("leading zeros are decimal") {
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("010") == Rational(10));
  CHECK(parse_rational("08/09") == Rational(8, 9));
  CHECK(parse_rational("0.09") == Rational(9, 100));
}
