#include "twoloop/laurent.hpp"

#include <sstream>
#include <utility>

namespace twoloop {

LaurentPolynomial::LaurentPolynomial(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(0, c);
}

LaurentPolynomial LaurentPolynomial::monomial(const Rational& c, std::int64_t doubled_exp) {
    LaurentPolynomial f;
    if (!c.is_zero()) f.terms_.emplace(doubled_exp, c);
    return f;
}

LaurentPolynomial LaurentPolynomial::power(std::int64_t doubled_exp) {
    return monomial(Rational(1), doubled_exp);
}

bool LaurentPolynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 &&
           terms_.begin()->second == Rational(1);
}

Rational LaurentPolynomial::coefficient(std::int64_t doubled_exp) const {
    auto it = terms_.find(doubled_exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::int64_t LaurentPolynomial::lowest_doubled_exponent() const {
    if (is_zero()) throw ZeroPolynomialError("lowest exponent of zero polynomial");
    return terms_.begin()->first;
}

std::int64_t LaurentPolynomial::highest_doubled_exponent() const {
    if (is_zero()) throw ZeroPolynomialError("highest exponent of zero polynomial");
    return terms_.rbegin()->first;
}

void LaurentPolynomial::add_term(std::int64_t doubled_exp, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(doubled_exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const Rational& c) const {
    LaurentPolynomial r;
    if (c.is_zero()) return r;
    for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
    return r;
}

LaurentPolynomial LaurentPolynomial::substitute_power(std::int64_t k) const {
    if (k == 0) throw InvalidParamsError("substitute_power with k = 0");
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e * k, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::derivative() const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) {
        if (e == 0) continue;
        r.terms_.emplace(e - 2, c * Rational(e, 2));
    }
    return r;
}

Rational LaurentPolynomial::evaluate_at_one() const {
    Rational s;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

bool LaurentPolynomial::is_symmetric() const {
    for (const auto& [e, c] : terms_)
        if (coefficient(-e) != c) return false;
    return true;
}

bool LaurentPolynomial::has_integer_exponents() const {
    for (const auto& [e, c] : terms_)
        if (e % 2 != 0) return false;
    return true;
}

bool LaurentPolynomial::has_integer_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_integer()) return false;
    return true;
}

std::string LaurentPolynomial::repr() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " ";
        first = false;
        if (e % 2 == 0)
            os << e / 2;
        else
            os << e << "/2";
        os << ":" << c.str();
    }
    return os.str();
}

namespace {

// Shift so the lowest doubled exponent becomes 0.
LaurentPolynomial strip_low(const LaurentPolynomial& f, std::int64_t& low_out) {
    low_out = f.lowest_doubled_exponent();
    LaurentPolynomial r;
    for (const auto& [e, c] : f.terms())
        r += LaurentPolynomial::monomial(c, e - low_out);
    return r;
}

// Ordinary top-down long division of a by b (both with lowest exponent 0,
// b != 0); returns the remainder, accumulating the quotient when asked for.
LaurentPolynomial poly_remainder(const LaurentPolynomial& a, const LaurentPolynomial& b,
                                 LaurentPolynomial* quotient) {
    const std::int64_t b_top = b.highest_doubled_exponent();
    const Rational lead = b.terms().rbegin()->second;
    LaurentPolynomial rem = a;
    while (!rem.is_zero() && rem.highest_doubled_exponent() >= b_top) {
        const Rational c = rem.terms().rbegin()->second / lead;
        const std::int64_t s = rem.highest_doubled_exponent() - b_top;
        const LaurentPolynomial mono = LaurentPolynomial::monomial(c, s);
        if (quotient) *quotient += mono;
        rem -= mono * b;
    }
    return rem;
}

}  // namespace

LaurentPolynomial exact_divide(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    if (g.is_zero()) throw InvalidParamsError("division by the zero polynomial");
    if (f.is_zero()) return LaurentPolynomial();

    // Laurent units are monomials: shift both operands so their lowest
    // doubled exponent is 0, divide as ordinary polynomials, shift back.
    std::int64_t f_low = 0;
    std::int64_t g_low = 0;
    const LaurentPolynomial fh = strip_low(f, f_low);
    const LaurentPolynomial gh = strip_low(g, g_low);

    LaurentPolynomial quot;
    const LaurentPolynomial rem = poly_remainder(fh, gh, &quot);
    if (!rem.is_zero())
        throw NotDivisibleError("exact division left remainder " + rem.repr());

    LaurentPolynomial shifted;
    for (const auto& [e, c] : quot.terms())
        shifted += LaurentPolynomial::monomial(c, e + f_low - g_low);
    return shifted;
}

LaurentPolynomial laurent_gcd(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    // Canonical representative: lowest doubled exponent 0, monic.
    auto canonical = [](const LaurentPolynomial& h) {
        std::int64_t low = 0;
        LaurentPolynomial s = strip_low(h, low);
        return s.scaled(s.terms().rbegin()->second.reciprocal());
    };

    if (f.is_zero() && g.is_zero()) return LaurentPolynomial();
    if (f.is_zero()) return canonical(g);
    if (g.is_zero()) return canonical(f);

    LaurentPolynomial a = canonical(f);
    LaurentPolynomial b = canonical(g);
    while (!b.is_zero()) {
        LaurentPolynomial rem = poly_remainder(a, b, nullptr);
        a = b;
        b = rem.is_zero() ? rem : canonical(rem);
    }
    return a;
}

LaurentPolynomial half_power_difference(std::int64_t k) {
    return LaurentPolynomial::power(k) - LaurentPolynomial::power(-k);
}

LaurentPolynomial half_power_sum(std::int64_t k) {
    return LaurentPolynomial::power(k) + LaurentPolynomial::power(-k);
}

}  // namespace twoloop
