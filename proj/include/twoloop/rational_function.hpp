#pragma once

#include "twoloop/laurent.hpp"

namespace twoloop {

/*
 * Reduced quotient of two Laurent polynomials. Canonical form: the fraction
 * is fully cancelled, the denominator has lowest doubled exponent 0 and is
 * monic (any monomial unit is absorbed into the numerator), so equal values
 * compare equal componentwise. Zero is 0/1.
 */
class RationalFunction {
public:
    RationalFunction() : den_(LaurentPolynomial::one()) {}
    explicit RationalFunction(LaurentPolynomial num)
        : num_(std::move(num)), den_(LaurentPolynomial::one()) {}
    RationalFunction(const LaurentPolynomial& num, const LaurentPolynomial& den);

    const LaurentPolynomial& num() const { return num_; }
    const LaurentPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

    RationalFunction scaled(const Rational& c) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    // Throws NotPolynomialError when the reduced denominator is not 1.
    LaurentPolynomial to_polynomial() const;

    // Quotient-rule formal derivative, re-reduced.
    RationalFunction derivative() const;

    // Value at t = 1. Throws PoleError when the reduced denominator
    // vanishes there; a residual pole is never treated as a limit.
    Rational evaluate_at_one() const;

    std::string repr() const;

private:
    LaurentPolynomial num_;
    LaurentPolynomial den_;
};

}  // namespace twoloop
