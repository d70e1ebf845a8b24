#include "doctest.h"

#include "hrf/scalar.hpp"

using namespace hrf;

TEST_CASE("parse and format rationals") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("+5") == Rational(5));
  CHECK(format_rational(Rational(-3, 2)) == "-3/2");
  CHECK(format_rational(Rational(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), ArithmeticError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ArithmeticError);
  CHECK_THROWS_AS(parse_rational("x"), ArithmeticError);
  CHECK_THROWS_AS(parse_rational(""), ArithmeticError);
}

TEST_CASE("valuations") {
  CHECK(valuation(Rational(75), 5) == 2);
  CHECK(valuation(Rational(2, 25), 5) == -2);
  CHECK(valuation(Rational(7, 3), 5) == 0);
  CHECK(valuation(Rational(0), 5) == kInfiniteValuation);
  CHECK(valuation(factorial(10), 3) == 4);
}

TEST_CASE("rings") {
  const Ring f3 = Ring::prime_field(3);
  CHECK(f3.normalize(Rational(-1)) == 2);
  CHECK(f3.normalize(Rational(1, 2)) == 2);
  CHECK(f3.mul(2, 2) == 1);
  CHECK(f3.inv(2) == 2);
  CHECK_THROWS_AS(f3.normalize(Rational(1, 3)), ArithmeticError);
  CHECK(f3.name() == "F3");

  const Ring z5 = Ring::p_local(5);
  CHECK(z5.contains(Rational(1, 3)));
  CHECK_FALSE(z5.contains(Rational(1, 5)));
  CHECK(z5.is_unit(Rational(3, 7)));
  CHECK_FALSE(z5.is_unit(Rational(10)));
  CHECK_FALSE(z5.is_field());
  CHECK(z5.linear_algebra_field() == Ring::rationals());
  CHECK(z5.name() == "Z5");

  CHECK_THROWS_AS(Ring::prime_field(2), CharacteristicTwoError);
  CHECK_THROWS_AS(Ring::p_local(2), CharacteristicTwoError);
  CHECK_THROWS_AS(Ring::prime_field(9), std::invalid_argument);
  CHECK_THROWS_AS(Ring::rationals().inv(0), ArithmeticError);
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(-1, 3) == -1);
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
}
