#include "twoloop/rational_function.hpp"

namespace twoloop {

RationalFunction::RationalFunction(const LaurentPolynomial& num,
                                   const LaurentPolynomial& den) {
    if (den.is_zero()) throw InvalidParamsError("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = LaurentPolynomial();
        den_ = LaurentPolynomial::one();
        return;
    }

    const LaurentPolynomial g = laurent_gcd(num, den);
    LaurentPolynomial n = exact_divide(num, g);
    LaurentPolynomial d = exact_divide(den, g);

    // Absorb the denominator's monomial unit and leading coefficient into
    // the numerator: den ends up monic with lowest doubled exponent 0.
    const std::int64_t d_low = d.lowest_doubled_exponent();
    const Rational lead = d.terms().rbegin()->second;
    LaurentPolynomial d_canon;
    for (const auto& [e, c] : d.terms())
        d_canon += LaurentPolynomial::monomial(c / lead, e - d_low);
    LaurentPolynomial n_canon;
    for (const auto& [e, c] : n.terms())
        n_canon += LaurentPolynomial::monomial(c / lead, e - d_low);

    num_ = std::move(n_canon);
    den_ = std::move(d_canon);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction RationalFunction::scaled(const Rational& c) const {
    RationalFunction r;
    if (c.is_zero()) return r;
    r.num_ = num_.scaled(c);
    r.den_ = den_;
    return r;
}

LaurentPolynomial RationalFunction::to_polynomial() const {
    if (!den_.is_one())
        throw NotPolynomialError("rational function is not a polynomial: " + repr());
    return num_;
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(),
                            den_ * den_);
}

Rational RationalFunction::evaluate_at_one() const {
    const Rational d = den_.evaluate_at_one();
    if (d.is_zero())
        throw PoleError("rational function has a pole at t = 1: " + repr());
    return num_.evaluate_at_one() / d;
}

std::string RationalFunction::repr() const {
    return "(" + num_.repr() + ") / (" + den_.repr() + ")";
}

}  // namespace twoloop
