#include "twoloop/vassiliev.hpp"

namespace twoloop {

Rational alexander_second_derivative_at_one(const LaurentPolynomial& alexander) {
    return alexander.derivative().derivative().evaluate_at_one();
}

Rational v2(const KnotRecord& k) {
    return Rational(-1, 2) * alexander_second_derivative_at_one(k.alexander);
}

Rational v3(const KnotRecord& k) {
    return Rational(1, 2) * reduce_theta_hat(k.theta).evaluate_at_one();
}

Rational v3_torus(std::int64_t p, std::int64_t q) {
    validated_torus_params(p, q);
    const Rational rp(p), rq(q);
    return rp * (rp * rp - Rational(1)) * rq * (rq * rq - Rational(1)) /
           Rational(144);
}

Rational v3_cable(const Rational& v3_base, const Rational& alexander_dd_at_one,
                  std::int64_t p, std::int64_t q) {
    validated_torus_params(p, q);
    const Rational rp(p), rq(q);
    const Rational p_cubed_term = rp * (rp * rp - Rational(1));
    return rp * rp * v3_base +
           p_cubed_term * rq * alexander_dd_at_one / Rational(12) +
           p_cubed_term * rq * (rq * rq - Rational(1)) / Rational(144);
}

}  // namespace twoloop
