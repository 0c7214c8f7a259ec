#include <doctest.h>

#include "twoloop/laurent.hpp"

using twoloop::LaurentPolynomial;
using twoloop::Rational;

namespace {

// Convenience monomial on the true (non-doubled) lattice: c * t^k.
LaurentPolynomial term(long c, std::int64_t k) {
    return LaurentPolynomial::monomial(Rational(c), 2 * k);
}

// c * t^(k/2)
LaurentPolynomial half_term(long c, std::int64_t doubled) {
    return LaurentPolynomial::monomial(Rational(c), doubled);
}

}  // namespace

TEST_CASE("addition merges and cancels") {
    // (t - 1) + (1 + 1/t) = t + 1/t
    const LaurentPolynomial sum = (term(1, 1) - term(1, 0)) + (term(1, 0) + term(1, -1));
    CHECK(sum == term(1, 1) + term(1, -1));

    const LaurentPolynomial f = term(3, 2) - term(1, 0);
    CHECK(f + LaurentPolynomial() == f);

    // t^(1/2) + t^(1/2) = 2 t^(1/2)
    CHECK(half_term(1, 1) + half_term(1, 1) == half_term(2, 1));
}

TEST_CASE("multiplication convolves doubled exponents") {
    // (t^(1/2) - t^(-1/2))^2 = t - 2 + 1/t
    const LaurentPolynomial sh1 = twoloop::half_power_difference(1);
    CHECK(sh1 * sh1 == term(1, 1) - term(2, 0) + term(1, -1));

    // (t - 1 + 1/t)(t^(1/2) + t^(-1/2)) = t^(3/2) + t^(-3/2)
    const LaurentPolynomial trefoil_alex = term(1, 1) - term(1, 0) + term(1, -1);
    CHECK(trefoil_alex * twoloop::half_power_sum(1) == twoloop::half_power_sum(3));

    const LaurentPolynomial f = half_term(2, 3) - term(5, -2);
    CHECK(f * LaurentPolynomial::one() == f);
}

TEST_CASE("substitute power scales the exponent lattice") {
    const LaurentPolynomial f = term(1, 1) - term(1, 0) + term(1, -1);
    CHECK(f.substitute_power(2) == term(1, 2) - term(1, 0) + term(1, -2));
    CHECK(f.substitute_power(1) == f);
    CHECK(half_term(1, 1).substitute_power(-1) == half_term(1, -1));
    CHECK_THROWS_AS(f.substitute_power(0), twoloop::InvalidParamsError);
}

TEST_CASE("formal derivative") {
    const LaurentPolynomial f = term(1, 1) - term(1, 0) + term(1, -1);
    CHECK(f.derivative() == term(1, 0) - term(1, -2));
    CHECK(f.derivative().derivative().evaluate_at_one() == Rational(2));
    CHECK(LaurentPolynomial(Rational(5)).derivative() == LaurentPolynomial());

    // half powers keep rational slope: d/dt t^(1/2) = 1/2 t^(-1/2)
    CHECK(half_term(1, 1).derivative() ==
          LaurentPolynomial::monomial(Rational(1, 2), -1));
}

TEST_CASE("evaluation at one sums coefficients") {
    CHECK((term(1, 1) - term(1, 0) + term(1, -1)).evaluate_at_one() == Rational(1));
    CHECK((term(1, 1) + term(1, -1)).evaluate_at_one() == Rational(2));
    CHECK(LaurentPolynomial().evaluate_at_one() == Rational(0));
}

TEST_CASE("exact division") {
    // (t^2 - 2t + 2 - 2/t + 1/t^2) / (t - 2 + 1/t) = t + 1/t
    const LaurentPolynomial num =
        term(1, 2) - term(2, 1) + term(2, 0) - term(2, -1) + term(1, -2);
    const LaurentPolynomial den = term(1, 1) - term(2, 0) + term(1, -1);
    CHECK(twoloop::exact_divide(num, den) == term(1, 1) + term(1, -1));

    const LaurentPolynomial f = half_term(3, -5) + term(2, 2);
    CHECK(twoloop::exact_divide(f, LaurentPolynomial::one()) == f);

    CHECK_THROWS_AS(twoloop::exact_divide(term(1, 1) - term(1, 0),
                                          term(1, 1) + term(1, 0)),
                    twoloop::NotDivisibleError);
    CHECK_THROWS_AS(twoloop::exact_divide(f, LaurentPolynomial()),
                    twoloop::InvalidParamsError);
}

TEST_CASE("symmetry predicate") {
    CHECK((term(1, 1) - term(1, 0) + term(1, -1)).is_symmetric());
    CHECK(!(term(1, 2) + term(1, -1)).is_symmetric());
    CHECK(LaurentPolynomial().is_symmetric());
}

TEST_CASE("gcd returns the canonical representative") {
    // gcd(t^2 - 1, t - 1) ~ t - 1
    const LaurentPolynomial a = term(1, 2) - term(1, 0);
    const LaurentPolynomial b = term(1, 1) - term(1, 0);
    CHECK(twoloop::laurent_gcd(a, b) == b);

    // monomial units never survive: gcd picks lowest exponent 0, monic
    const LaurentPolynomial c = (term(1, 1) - term(1, 0)).scaled(Rational(3)) * term(1, 5);
    CHECK(twoloop::laurent_gcd(c, c) == term(1, 1) - term(1, 0));

    CHECK(twoloop::laurent_gcd(a, LaurentPolynomial()) == term(1, 2) - term(1, 0));
    CHECK(twoloop::laurent_gcd(LaurentPolynomial(), LaurentPolynomial()) ==
          LaurentPolynomial());

    // coprime inputs reduce to 1
    CHECK(twoloop::laurent_gcd(term(1, 1) - term(1, 0), term(1, 1) + term(1, 0))
              .is_one());
}
