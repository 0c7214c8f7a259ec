#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "twoloop/laurent.hpp"

namespace twoloop {

/*
 * Element of Q[t1^(±1/2), t2^(±1/2), t3^(±1/2)] / (t1 t2 t3 = 1) in the
 * canonical two-variable form with t3 eliminated: the monomial
 * t1^(n/2) t2^(m/2) is stored under the doubled-exponent key (n, m).
 * No stored coefficient is zero; iteration is ascending lexicographic.
 */
class ThetaPolynomial {
public:
    using Key = std::pair<std::int64_t, std::int64_t>;
    using TermMap = std::map<Key, Rational>;

    ThetaPolynomial() = default;  // zero
    explicit ThetaPolynomial(const Rational& c);

    static ThetaPolynomial monomial(const Rational& c, std::int64_t n, std::int64_t m);
    static ThetaPolynomial one() { return ThetaPolynomial(Rational(1)); }

    // Interpret a univariate Laurent polynomial as a function of t_slot
    // (slot in {1,2,3}); slot 3 substitutes t3 = (t1 t2)^(-1).
    static ThetaPolynomial embed(const LaurentPolynomial& f, int slot);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(std::int64_t n, std::int64_t m) const;

    ThetaPolynomial operator-() const;
    ThetaPolynomial& operator+=(const ThetaPolynomial& o);
    ThetaPolynomial& operator-=(const ThetaPolynomial& o);
    friend ThetaPolynomial operator+(ThetaPolynomial a, const ThetaPolynomial& b) {
        return a += b;
    }
    friend ThetaPolynomial operator-(ThetaPolynomial a, const ThetaPolynomial& b) {
        return a -= b;
    }
    friend ThetaPolynomial operator*(const ThetaPolynomial& a, const ThetaPolynomial& b);

    ThetaPolynomial scaled(const Rational& c) const;

    // (t1, t2, t3) -> (t1^p, t2^p, t3^p); consistent with the quotient
    // relation, every key is multiplied by p.
    ThetaPolynomial substitute_power(std::int64_t p) const;

    // t1 = t, t2 = 1/t, t3 = 1: key (n, m) -> doubled exponent n - m.
    LaurentPolynomial specialize() const;

    bool has_integer_exponents() const;
    bool has_integer_coefficients() const;

    friend bool operator==(const ThetaPolynomial& a, const ThetaPolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const ThetaPolynomial& a, const ThetaPolynomial& b) {
        return !(a == b);
    }

    std::string repr() const;

private:
    void add_term(const Key& k, const Rational& c);

    TermMap terms_;

    friend ThetaPolynomial exact_divide_factor(const ThetaPolynomial&,
                                               const LaurentPolynomial&, int);
};

/*
 * The theta-graph symmetry: S3 permutations of (t1, t2, t3) combined with
 * simultaneous inversion, 12 elements in total. Acting on the canonical
 * two-variable form, each element is an integer-linear map on keys.
 */
struct GroupElement {
    std::array<int, 3> permutation;  // slot i carries to slot permutation[i-1]
    int epsilon;                     // +1 or -1

    // Column-major 2x2 key map: key (n, m) -> (a*n + b*m, c*n + d*m).
    std::array<std::int64_t, 4> key_map;  // {a, b, c, d}

    ThetaPolynomial::Key apply(const ThetaPolynomial::Key& k) const {
        return {key_map[0] * k.first + key_map[1] * k.second,
                key_map[2] * k.first + key_map[3] * k.second};
    }

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.permutation == b.permutation && a.epsilon == b.epsilon;
    }
};

// The 12 group elements, fixed enumeration order.
const std::array<GroupElement, 12>& theta_symmetry_group();

// Composition g * h (apply h first, then g).
GroupElement compose(const GroupElement& g, const GroupElement& h);

ThetaPolynomial group_act(const GroupElement& g, const ThetaPolynomial& a);

// Sum over all 12 group images.
ThetaPolynomial symmetrize(const ThetaPolynomial& theta_prime);

bool is_group_invariant(const ThetaPolynomial& a);

/*
 * Direction of a univariate-in-a-monomial divisor: the polynomial g is read
 * in t1, in t2, or in the monomial t1*t2 (the eliminated form of functions
 * of t3 up to inversion).
 */
enum class Direction { t1, t2, t1t2 };

// Exact quotient of a by g(t_direction); throws NotDivisibleError with the
// offending remainder term.
ThetaPolynomial exact_divide_factor(const ThetaPolynomial& a, const LaurentPolynomial& g,
                                    Direction direction);

// The unimodular lattice transform taking the division direction to the
// first axis, and its inverse. Mutually inverse on every key.
ThetaPolynomial::Key direction_forward_key(const ThetaPolynomial::Key& k, Direction d);
ThetaPolynomial::Key direction_inverse_key(const ThetaPolynomial::Key& k, Direction d);

// Specialize then divide by (t^(1/2) - t^(-1/2))^2.
// Pre: the specialization vanishes at t = 1.
LaurentPolynomial reduce_theta_hat(const ThetaPolynomial& a);

struct DomainCell {
    std::int64_t n;  // true (integer) exponents
    std::int64_t m;
    Rational coefficient;

    friend bool operator==(const DomainCell& a, const DomainCell& b) {
        return a.n == b.n && a.m == b.m && a.coefficient == b.coefficient;
    }
};

// Restriction of the coefficient map to the cone 0 <= 2m <= n, sorted by
// (n, m). Pre: integer exponents only (throws HalfIntegerExponentError).
std::vector<DomainCell> fundamental_domain(const ThetaPolynomial& a);

// max n/2 over keys, as an exact half-integer. Throws ZeroPolynomialError.
Rational degree_t1(const ThetaPolynomial& a);

}  // namespace twoloop
