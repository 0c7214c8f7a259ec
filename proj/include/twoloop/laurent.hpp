#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "twoloop/rational.hpp"

namespace twoloop {

/*
 * Univariate Laurent polynomial over Q with exponents on the half-integer
 * lattice. A term c * t^(e/2) is stored under the doubled exponent e, so
 * t^(1/2), t^(p/2), t^(pq/2) are exact integer keys. Invariant: no stored
 * coefficient is zero; iteration order is ascending doubled exponent.
 */
class LaurentPolynomial {
public:
    using TermMap = std::map<std::int64_t, Rational>;

    LaurentPolynomial() = default;                 // zero
    explicit LaurentPolynomial(const Rational& c); // constant

    // c * t^(doubled_exp / 2)
    static LaurentPolynomial monomial(const Rational& c, std::int64_t doubled_exp);
    // t^(doubled_exp / 2)
    static LaurentPolynomial power(std::int64_t doubled_exp);
    static LaurentPolynomial one() { return LaurentPolynomial(Rational(1)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }

    // Zero for absent keys.
    Rational coefficient(std::int64_t doubled_exp) const;

    // Preconditions: nonzero polynomial.
    std::int64_t lowest_doubled_exponent() const;
    std::int64_t highest_doubled_exponent() const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
        return a += b;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
        return a -= b;
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                       const LaurentPolynomial& b);

    LaurentPolynomial scaled(const Rational& c) const;

    // f(t^k). Pre: k != 0.
    LaurentPolynomial substitute_power(std::int64_t k) const;

    // Formal d/dt: c * t^(e/2) -> c * (e/2) * t^(e/2 - 1).
    LaurentPolynomial derivative() const;

    // Value at t = 1, i.e. the coefficient sum.
    Rational evaluate_at_one() const;

    // f(t) == f(1/t)?
    bool is_symmetric() const;

    bool has_integer_exponents() const;
    bool has_integer_coefficients() const;

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.terms_ != b.terms_;
    }

    // Debug-oriented form: canonical ascending term list "e/2:c".
    std::string repr() const;

private:
    void add_term(std::int64_t doubled_exp, const Rational& c);

    TermMap terms_;

    friend LaurentPolynomial exact_divide(const LaurentPolynomial&,
                                          const LaurentPolynomial&);
};

// Exact quotient f / g; throws NotDivisibleError on a nonzero remainder and
// InvalidParamsError when g = 0.
LaurentPolynomial exact_divide(const LaurentPolynomial& f, const LaurentPolynomial& g);

// Canonical gcd representative: lowest doubled exponent 0, monic. gcd(0,0) = 0.
LaurentPolynomial laurent_gcd(const LaurentPolynomial& f, const LaurentPolynomial& g);

// t^(k/2) - t^(-k/2) and t^(k/2) + t^(-k/2); the building blocks of every
// closed formula in the torus and cabling modules.
LaurentPolynomial half_power_difference(std::int64_t k);
LaurentPolynomial half_power_sum(std::int64_t k);

}  // namespace twoloop
