#include <doctest.h>

#include "twoloop/rational.hpp"

using twoloop::Integer;
using twoloop::Rational;

TEST_CASE("rationals are canonical on construction") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).denominator() == 1);
    CHECK(Rational(-6, 4).numerator() == -3);
    CHECK(Rational(-6, 4).denominator() == 2);
    CHECK_THROWS_AS(Rational(1, 0), twoloop::InvalidParamsError);
}

TEST_CASE("arithmetic and comparisons") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(5).is_integer());
    CHECK(!Rational(5, 2).is_integer());
    CHECK(Rational(-3, 7).sign() == -1);
    CHECK_THROWS_AS(Rational(1) / Rational(0), twoloop::InvalidParamsError);
    CHECK_THROWS_AS(Rational(0).reciprocal(), twoloop::InvalidParamsError);
}

TEST_CASE("string round trip") {
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(-7).str() == "-7");
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-4") == Rational(-4));
    CHECK_THROWS_AS(Rational::parse("nonsense"), twoloop::InvalidParamsError);
}

TEST_CASE("arbitrary precision") {
    const Rational big = Rational(Integer("123456789012345678901234567890"), Integer(2));
    CHECK((big + big).is_integer());
    CHECK((big + big).str() == "123456789012345678901234567890");
}
