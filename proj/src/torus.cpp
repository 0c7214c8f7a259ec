#include "twoloop/torus.hpp"

#include <numeric>
#include <string>

namespace twoloop {

namespace {

std::string pair_str(std::int64_t p, std::int64_t q) {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

}  // namespace

TorusParams validated_torus_params(std::int64_t p, std::int64_t q) {
    if (p < 1 || q < 1)
        throw InvalidParamsError("torus/cable parameters must be positive: " +
                                 pair_str(p, q));
    if (std::gcd(p, q) != 1)
        throw InvalidParamsError("torus/cable parameters must be coprime: " +
                                 pair_str(p, q));
    return TorusParams{p, q};
}

LaurentPolynomial torus_alexander(std::int64_t p, std::int64_t q) {
    validated_torus_params(p, q);
    const LaurentPolynomial num =
        half_power_difference(p * q) * half_power_difference(1);
    const LaurentPolynomial den =
        half_power_difference(p) * half_power_difference(q);
    LaurentPolynomial delta = exact_divide(num, den);

    if (!delta.is_symmetric() || !delta.has_integer_exponents() ||
        delta.evaluate_at_one() != Rational(1))
        throw ConsistencyError("alexander polynomial of T" + pair_str(p, q) +
                               " failed its normalization invariants");
    return delta;
}

RationalFunction torus_phi(std::int64_t p, std::int64_t q) {
    validated_torus_params(p, q);
    const RationalFunction first(half_power_sum(p), half_power_difference(p));
    const RationalFunction second(half_power_sum(p * q), half_power_difference(p * q));
    RationalFunction phi = first - second.scaled(Rational(q));

    if (!phi.is_zero() && phi.evaluate_at_one() != Rational(0))
        throw ConsistencyError("phi" + pair_str(p, q) + " must vanish at t = 1");
    return phi;
}

LaurentPolynomial torus_psi_numerator(std::int64_t p, std::int64_t q) {
    // sh(1) (ch(p) * sh(pq)/sh(p) - q ch(pq)); sh(pq)/sh(p) is the geometric
    // polynomial, so this is an exact Laurent polynomial.
    const LaurentPolynomial geometric =
        exact_divide(half_power_difference(p * q), half_power_difference(p));
    return half_power_difference(1) *
           (half_power_sum(p) * geometric -
            half_power_sum(p * q).scaled(Rational(q)));
}

RationalFunction torus_psi(std::int64_t p, std::int64_t q) {
    return RationalFunction(torus_alexander(p, q)) * torus_phi(p, q);
}

RationalFunction torus_psi_quotient_form(std::int64_t p, std::int64_t q) {
    validated_torus_params(p, q);
    return RationalFunction(torus_psi_numerator(p, q),
                            half_power_difference(p) * half_power_difference(q));
}

ThetaPolynomial torus_theta(std::int64_t p, std::int64_t q) {
    validated_torus_params(p, q);

    // Every factor of the defining sum is a rational function whose
    // denominator is sh(p) sh(q) in its own variable, so the whole sum sits
    // over the common denominator D(t1) D(t2) D(t3); assemble the numerator
    // and clear one variable at a time.
    const LaurentPolynomial psi_pq = torus_psi_numerator(p, q);
    const LaurentPolynomial psi_qp = torus_psi_numerator(q, p);
    const LaurentPolynomial alex_num =
        half_power_difference(p * q) * half_power_difference(1);
    const LaurentPolynomial common_den =
        half_power_difference(p) * half_power_difference(q);

    ThetaPolynomial numerator;
    constexpr int kOrderedTriples[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                           {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    for (const auto& triple : kOrderedTriples) {
        numerator += ThetaPolynomial::embed(psi_pq, triple[0]) *
                     ThetaPolynomial::embed(psi_qp, triple[1]) *
                     ThetaPolynomial::embed(alex_num, triple[2]);
    }
    numerator = numerator.scaled(Rational(-1, 4));

    ThetaPolynomial theta = exact_divide_factor(numerator, common_den, Direction::t1);
    theta = exact_divide_factor(theta, common_den, Direction::t2);
    // common_den is symmetric under t -> 1/t, so dividing in the t1*t2
    // monomial equals dividing by D(t3).
    theta = exact_divide_factor(theta, common_den, Direction::t1t2);

    if (!theta.has_integer_exponents() || !theta.has_integer_coefficients())
        throw ConsistencyError("2-loop polynomial of T" + pair_str(p, q) +
                               " is not integral");
    if (!is_group_invariant(theta))
        throw ConsistencyError("2-loop polynomial of T" + pair_str(p, q) +
                               " is not symmetric under the theta-graph group");
    if (theta.specialize().evaluate_at_one() != Rational(0))
        throw ConsistencyError("2-loop polynomial of T" + pair_str(p, q) +
                               " does not vanish at t1 = t2 = t3 = 1");
    return theta;
}

LaurentPolynomial torus_theta_hat(std::int64_t p, std::int64_t q) {
    validated_torus_params(p, q);
    const LaurentPolynomial num =
        torus_psi_numerator(p, q) * torus_psi_numerator(q, p);
    if (num.is_zero()) return LaurentPolynomial();

    const LaurentPolynomial sh1 = half_power_difference(1);
    const LaurentPolynomial shp = half_power_difference(p);
    const LaurentPolynomial shq = half_power_difference(q);
    const LaurentPolynomial den = sh1 * sh1 * shp * shp * shq * shq;

    LaurentPolynomial hat = exact_divide(num, den).scaled(Rational(1, 2));
    if (!hat.is_symmetric())
        throw ConsistencyError("reduced 2-loop polynomial of T" + pair_str(p, q) +
                               " is not symmetric");
    return hat;
}

LaurentPolynomial torus_theta_hat_closed_form(std::int64_t p, std::int64_t q) {
    validated_torus_params(p, q);
    if (q == 2) {
        //        t^3 ( (p-1)/2 (t^(p+1) - t^(-p-1)) - (p+1)/2 (t^(p-1) - t^(-p+1)) )
        // hat = ------------------------------------------------------------------
        //                                 (t^2 - 1)^3
        const LaurentPolynomial num =
            LaurentPolynomial::power(6) *
            (half_power_difference(2 * (p + 1)).scaled(Rational(p - 1, 2)) -
             half_power_difference(2 * (p - 1)).scaled(Rational(p + 1, 2)));
        const LaurentPolynomial t2_minus_1 =
            LaurentPolynomial::power(4) - LaurentPolynomial::one();
        return exact_divide(num, t2_minus_1 * t2_minus_1 * t2_minus_1);
    }
    if (q == 3) {
        //        (t^(p/2) + t^(-p/2)) ( (p-1)(t^(3(p+1)/2) - t^(-3(p+1)/2))
        //                               - (p+1)(t^(3(p-1)/2) - t^(-3(p-1)/2)) )
        // hat = ----------------------------------------------------------------
        //                         (t^(3/2) - t^(-3/2))^3
        const LaurentPolynomial num =
            half_power_sum(p) *
            (half_power_difference(3 * (p + 1)).scaled(Rational(p - 1)) -
             half_power_difference(3 * (p - 1)).scaled(Rational(p + 1)));
        const LaurentPolynomial sh3 = half_power_difference(3);
        return exact_divide(num, sh3 * sh3 * sh3);
    }
    throw InvalidParamsError("closed form available only for q = 2 or q = 3, got q = " +
                             std::to_string(q));
}

}  // namespace twoloop
