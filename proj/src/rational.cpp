#include "twoloop/rational.hpp"

#include <ostream>

namespace twoloop {

Rational::Rational(long num, long den) : value_(num, den) {
    if (den == 0) throw InvalidParamsError("rational with zero denominator");
    value_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
    if (den == 0) throw InvalidParamsError("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw InvalidParamsError("malformed rational: '" + text + "'");
    if (v.get_den() == 0)
        throw InvalidParamsError("rational with zero denominator: '" + text + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidParamsError("rational division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw InvalidParamsError("reciprocal of zero");
    return Rational(mpq_class(1) / value_);
}

std::string Rational::str() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.value_;
}

}  // namespace twoloop
