#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "twoloop/errors.hpp"

namespace twoloop {

using Integer = mpz_class;

/*
 * Exact rational scalar. Always kept canonical: gcd(|num|, den) = 1,
 * den >= 1, zero is 0/1. Backed by GMP.
 */
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(static_cast<long>(n)) {}  // NOLINT: implicit by design
    Rational(long n) : value_(n) {}                    // NOLINT
    Rational(long long n) : value_(Integer(std::to_string(n))) {}  // NOLINT
    explicit Rational(const Integer& n) : value_(n) {}

    Rational(long num, long den);
    Rational(const Integer& num, const Integer& den);

    // Accepts "z" or "z/w"; any sign placement, canonicalized on input.
    static Rational parse(const std::string& text);

    const Integer& numerator() const { return value_.get_num(); }
    const Integer& denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return a.value_ != b.value_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.value_ < b.value_;
    }

    Rational reciprocal() const;

    // "z" or "z/w" in lowest terms, w > 0.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

}  // namespace twoloop
