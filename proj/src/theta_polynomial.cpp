#include "twoloop/theta_polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace twoloop {

ThetaPolynomial::ThetaPolynomial(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Key{0, 0}, c);
}

ThetaPolynomial ThetaPolynomial::monomial(const Rational& c, std::int64_t n,
                                          std::int64_t m) {
    ThetaPolynomial r;
    if (!c.is_zero()) r.terms_.emplace(Key{n, m}, c);
    return r;
}

ThetaPolynomial ThetaPolynomial::embed(const LaurentPolynomial& f, int slot) {
    if (slot < 1 || slot > 3) throw InvalidParamsError("embed slot must be 1, 2, or 3");
    ThetaPolynomial r;
    for (const auto& [e, c] : f.terms()) {
        Key k{0, 0};
        switch (slot) {
            case 1: k = {e, 0}; break;
            case 2: k = {0, e}; break;
            case 3: k = {-e, -e}; break;  // t3 = (t1 t2)^(-1)
        }
        r.terms_.emplace(k, c);
    }
    return r;
}

Rational ThetaPolynomial::coefficient(std::int64_t n, std::int64_t m) const {
    auto it = terms_.find(Key{n, m});
    return it == terms_.end() ? Rational(0) : it->second;
}

void ThetaPolynomial::add_term(const Key& k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ThetaPolynomial ThetaPolynomial::operator-() const {
    ThetaPolynomial r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

ThetaPolynomial& ThetaPolynomial::operator+=(const ThetaPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

ThetaPolynomial& ThetaPolynomial::operator-=(const ThetaPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

ThetaPolynomial operator*(const ThetaPolynomial& a, const ThetaPolynomial& b) {
    ThetaPolynomial r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
}

ThetaPolynomial ThetaPolynomial::scaled(const Rational& c) const {
    ThetaPolynomial r;
    if (c.is_zero()) return r;
    for (const auto& [k, coeff] : terms_) r.terms_.emplace(k, coeff * c);
    return r;
}

ThetaPolynomial ThetaPolynomial::substitute_power(std::int64_t p) const {
    if (p == 0) throw InvalidParamsError("substitute_power with p = 0");
    ThetaPolynomial r;
    for (const auto& [k, c] : terms_)
        r.terms_.emplace(Key{k.first * p, k.second * p}, c);
    return r;
}

LaurentPolynomial ThetaPolynomial::specialize() const {
    LaurentPolynomial r;
    for (const auto& [k, c] : terms_)
        r += LaurentPolynomial::monomial(c, k.first - k.second);
    return r;
}

bool ThetaPolynomial::has_integer_exponents() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
        return t.first.first % 2 == 0 && t.first.second % 2 == 0;
    });
}

bool ThetaPolynomial::has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.is_integer(); });
}

std::string ThetaPolynomial::repr() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " ";
        first = false;
        os << "(" << k.first << "," << k.second << "):" << c.str();
    }
    return os.str();
}

namespace {

// Doubled-exponent contribution of one unit of t_slot, after eliminating t3.
constexpr std::array<std::array<std::int64_t, 2>, 3> kSlotVectors{{
    {{1, 0}},    // t1
    {{0, 1}},    // t2
    {{-1, -1}},  // t3 = (t1 t2)^(-1)
}};

GroupElement make_element(const std::array<int, 3>& perm, int eps) {
    GroupElement g;
    g.permutation = perm;
    g.epsilon = eps;
    const auto& u = kSlotVectors[perm[0] - 1];  // image of t1
    const auto& v = kSlotVectors[perm[1] - 1];  // image of t2
    g.key_map = {eps * u[0], eps * v[0], eps * u[1], eps * v[1]};
    return g;
}

}  // namespace

const std::array<GroupElement, 12>& theta_symmetry_group() {
    static const std::array<GroupElement, 12> elements = [] {
        const std::array<std::array<int, 3>, 6> perms{{
            {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1},
        }};
        std::array<GroupElement, 12> out{};
        std::size_t i = 0;
        for (const auto& p : perms)
            for (int eps : {1, -1}) out[i++] = make_element(p, eps);
        return out;
    }();
    return elements;
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    std::array<int, 3> perm{};
    for (int i = 0; i < 3; ++i) perm[i] = g.permutation[h.permutation[i] - 1];
    return make_element(perm, g.epsilon * h.epsilon);
}

ThetaPolynomial group_act(const GroupElement& g, const ThetaPolynomial& a) {
    ThetaPolynomial r;
    for (const auto& [k, c] : a.terms())
        r += ThetaPolynomial::monomial(c, g.apply(k).first, g.apply(k).second);
    return r;
}

ThetaPolynomial symmetrize(const ThetaPolynomial& theta_prime) {
    ThetaPolynomial r;
    for (const auto& g : theta_symmetry_group()) r += group_act(g, theta_prime);
    return r;
}

bool is_group_invariant(const ThetaPolynomial& a) {
    return std::all_of(theta_symmetry_group().begin(), theta_symmetry_group().end(),
                       [&](const GroupElement& g) { return group_act(g, a) == a; });
}

ThetaPolynomial::Key direction_forward_key(const ThetaPolynomial::Key& k, Direction d) {
    switch (d) {
        case Direction::t1: return k;
        case Direction::t2: return {k.second, k.first};
        case Direction::t1t2: return {k.first, k.second - k.first};
    }
    return k;
}

ThetaPolynomial::Key direction_inverse_key(const ThetaPolynomial::Key& k, Direction d) {
    switch (d) {
        case Direction::t1: return k;
        case Direction::t2: return {k.second, k.first};
        case Direction::t1t2: return {k.first, k.second + k.first};
    }
    return k;
}

namespace {
using Key = ThetaPolynomial::Key;
}  // namespace

ThetaPolynomial exact_divide_factor(const ThetaPolynomial& a, const LaurentPolynomial& g,
                                    Direction direction) {
    if (g.is_zero()) throw InvalidParamsError("division by the zero polynomial");
    if (a.is_zero()) return ThetaPolynomial();

    // Rows indexed by the transformed first coordinate; row values are
    // Laurent polynomials in the second coordinate.
    std::map<std::int64_t, LaurentPolynomial> rows;
    std::int64_t a_low = 0;
    bool first = true;
    for (const auto& [k, c] : a.terms()) {
        const Key t = direction_forward_key(k, direction);
        if (first || t.first < a_low) a_low = t.first;
        first = false;
    }
    for (const auto& [k, c] : a.terms()) {
        const Key t = direction_forward_key(k, direction);
        rows[t.first - a_low] += LaurentPolynomial::monomial(c, t.second);
    }

    const std::int64_t g_low = g.lowest_doubled_exponent();
    const std::int64_t g_top = g.highest_doubled_exponent() - g_low;
    const Rational g_lead = g.terms().rbegin()->second;

    auto drop_empty_top = [&rows] {
        while (!rows.empty() && rows.rbegin()->second.is_zero()) rows.erase(std::prev(rows.end()));
    };

    ThetaPolynomial quotient;
    drop_empty_top();
    while (!rows.empty() && rows.rbegin()->first >= g_top) {
        const std::int64_t r_top = rows.rbegin()->first;
        const LaurentPolynomial chunk = rows.rbegin()->second.scaled(g_lead.reciprocal());
        const std::int64_t q_row = r_top - g_top;
        for (const auto& [m, c] : chunk.terms()) {
            const Key back = direction_inverse_key({q_row + a_low - g_low, m}, direction);
            quotient += ThetaPolynomial::monomial(c, back.first, back.second);
        }
        for (const auto& [e, ce] : g.terms())
            rows[q_row + (e - g_low)] -= chunk.scaled(ce);
        drop_empty_top();
    }

    for (const auto& [row, poly] : rows) {
        if (poly.is_zero()) continue;
        const auto& [m, c] = *poly.terms().begin();
        const Key back = direction_inverse_key({row + a_low, m}, direction);
        throw NotDivisibleError("factor division left remainder term (" +
                                std::to_string(back.first) + "," +
                                std::to_string(back.second) + "): " + c.str());
    }
    return quotient;
}

LaurentPolynomial reduce_theta_hat(const ThetaPolynomial& a) {
    // (t^(1/2) - t^(-1/2))^2 = t - 2 + 1/t
    const LaurentPolynomial divisor =
        half_power_difference(1) * half_power_difference(1);
    return exact_divide(a.specialize(), divisor);
}

std::vector<DomainCell> fundamental_domain(const ThetaPolynomial& a) {
    std::vector<DomainCell> cells;
    for (const auto& [k, c] : a.terms()) {
        if (k.first % 2 != 0 || k.second % 2 != 0)
            throw HalfIntegerExponentError(
                "fundamental domain requested for half-integer key (" +
                std::to_string(k.first) + "/2," + std::to_string(k.second) + "/2)");
        const std::int64_t n = k.first / 2;
        const std::int64_t m = k.second / 2;
        if (0 <= 2 * m && 2 * m <= n) cells.push_back({n, m, c});
    }
    return cells;  // map order is already (n, m)-lexicographic
}

Rational degree_t1(const ThetaPolynomial& a) {
    if (a.is_zero()) throw ZeroPolynomialError("degree of the zero polynomial");
    std::int64_t best = a.terms().begin()->first.first;
    for (const auto& [k, c] : a.terms()) best = std::max(best, k.first);
    return Rational(best, 2);
}

}  // namespace twoloop
