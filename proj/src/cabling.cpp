#include "twoloop/knot_record.hpp"

namespace twoloop {

void validate_record(const KnotRecord& record) {
    if (!record.alexander.has_integer_exponents())
        throw ValidationError("alexander exponents not integral");
    if (!record.alexander.is_symmetric())
        throw ValidationError("alexander not symmetric");
    if (record.alexander.evaluate_at_one() != Rational(1))
        throw ValidationError("alexander does not evaluate to 1 at t = 1");

    // Epsilon and the pure permutations generate the whole group.
    for (const auto& g : theta_symmetry_group()) {
        if (group_act(g, record.theta) == record.theta) continue;
        const bool identity_perm = g.permutation == std::array<int, 3>{1, 2, 3};
        if (identity_perm && g.epsilon == -1)
            throw ValidationError("theta not invariant under epsilon");
        throw ValidationError("theta not invariant under permutation");
    }
    if (record.theta.specialize().evaluate_at_one() != Rational(0))
        throw ValidationError("theta does not vanish at t1 = t2 = t3 = 1");
}

KnotRecord unknot_record() {
    return KnotRecord{"unknot", LaurentPolynomial::one(), ThetaPolynomial(), "builtin"};
}

KnotRecord torus_record(std::int64_t p, std::int64_t q) {
    return cable_record(unknot_record(), p, q);
}

LaurentPolynomial cable_alexander(const KnotRecord& k, std::int64_t p, std::int64_t q) {
    validated_torus_params(p, q);
    return torus_alexander(p, q) * k.alexander.substitute_power(p);
}

ThetaPolynomial cable_theta(const KnotRecord& k, std::int64_t p, std::int64_t q) {
    validated_torus_params(p, q);

    const ThetaPolynomial from_torus = torus_theta(p, q);
    const ThetaPolynomial from_base = k.theta.substitute_power(p);

    // Correction term. Regrouped with psi = alexander * phi so that the
    // denominator of each ordered-triple summand lives in exactly one
    // variable:
    //   1/2 sum_{i,j,k} A(t_i) B(t_j) C(t_k),
    //   A = Delta_T * Delta_K'(t^p) t^p          (polynomial),
    //   B = psi_{q,p} * Delta_K(t^p)             (denominator sh(p) sh(q)),
    //   C = Delta_T * Delta_K(t^p)               (polynomial).
    // Grouping the two summands with a common j, each group is exactly
    // divisible by the denominator in the j direction.
    const LaurentPolynomial alex_t = torus_alexander(p, q);
    const LaurentPolynomial alex_k_p = k.alexander.substitute_power(p);
    const LaurentPolynomial deriv_k_p =
        (k.alexander.derivative() * LaurentPolynomial::power(2)).substitute_power(p);

    const LaurentPolynomial a_factor = alex_t * deriv_k_p;
    const LaurentPolynomial c_factor = alex_t * alex_k_p;
    const LaurentPolynomial b_numerator = torus_psi_numerator(q, p) * alex_k_p;
    const LaurentPolynomial common_den =
        half_power_difference(p) * half_power_difference(q);

    ThetaPolynomial correction;
    constexpr Direction kDirections[3] = {Direction::t1, Direction::t2,
                                          Direction::t1t2};
    for (int j = 1; j <= 3; ++j) {
        const int i = j == 1 ? 2 : 1;
        const int l = j == 3 ? 2 : 3;
        ThetaPolynomial group =
            ThetaPolynomial::embed(b_numerator, j) *
            (ThetaPolynomial::embed(a_factor, i) * ThetaPolynomial::embed(c_factor, l) +
             ThetaPolynomial::embed(a_factor, l) * ThetaPolynomial::embed(c_factor, i));
        if (!group.is_zero())
            group = exact_divide_factor(group, common_den, kDirections[j - 1]);
        correction += group;
    }

    ThetaPolynomial theta = from_torus + from_base + correction.scaled(Rational(1, 2));

    if (!is_group_invariant(theta))
        throw ConsistencyError("cabled 2-loop polynomial is not group invariant");
    if (theta.specialize().evaluate_at_one() != Rational(0))
        throw ConsistencyError(
            "cabled 2-loop polynomial does not vanish at t1 = t2 = t3 = 1");
    return theta;
}

LaurentPolynomial cable_theta_hat(const KnotRecord& k, std::int64_t p, std::int64_t q) {
    validated_torus_params(p, q);

    const LaurentPolynomial hat_k = reduce_theta_hat(k.theta);
    const LaurentPolynomial sh1 = half_power_difference(1);
    const LaurentPolynomial shp = half_power_difference(p);
    const LaurentPolynomial shq = half_power_difference(q);

    // sh(p)^2 / sh(1)^2 is itself a polynomial; divide it out first.
    const LaurentPolynomial window = exact_divide(shp, sh1);
    const LaurentPolynomial scaled_base = window * window * hat_k.substitute_power(p);

    // t^p Delta_T Delta_K(t^p) Delta_K'(t^p) psi_{q,p} / sh(1)^2 as one
    // exact division.
    const LaurentPolynomial third_num =
        LaurentPolynomial::power(2 * p) * torus_alexander(p, q) *
        k.alexander.substitute_power(p) * k.alexander.derivative().substitute_power(p) *
        torus_psi_numerator(q, p);
    LaurentPolynomial third;
    if (!third_num.is_zero()) third = exact_divide(third_num, sh1 * sh1 * shp * shq);

    LaurentPolynomial hat = torus_theta_hat(p, q) + scaled_base - third;
    if (!hat.is_symmetric())
        throw ConsistencyError("cabled reduced 2-loop polynomial is not symmetric");
    return hat;
}

KnotRecord cable_record(const KnotRecord& k, std::int64_t p, std::int64_t q) {
    validated_torus_params(p, q);
    KnotRecord out;
    out.name = k.name + "^(" + std::to_string(p) + "," + std::to_string(q) + ")";
    out.alexander = cable_alexander(k, p, q);
    out.theta = cable_theta(k, p, q);
    const std::string step = "cable(" + std::to_string(p) + "," + std::to_string(q) + ")";
    out.provenance = k.provenance.empty() ? step : k.provenance + "; " + step;
    return out;
}

}  // namespace twoloop
