#pragma once

#include "twoloop/knot_record.hpp"

namespace twoloop {

// Second formal derivative of the Alexander polynomial at t = 1.
Rational alexander_second_derivative_at_one(const LaurentPolynomial& alexander);

// Degree-2 Vassiliev invariant: -1/2 Delta_K''(1).
Rational v2(const KnotRecord& k);

// Degree-3 Vassiliev invariant: 1/2 theta-hat_K(1).
Rational v3(const KnotRecord& k);

// Closed form for torus knots: p (p^2 - 1) q (q^2 - 1) / 144.
Rational v3_torus(std::int64_t p, std::int64_t q);

// Cabling formula:
//   v3(K^(p,q)) = p^2 v3(K) + 1/12 p (p^2-1) q Delta_K''(1)
//                 + 1/144 p (p^2-1) q (q^2-1).
Rational v3_cable(const Rational& v3_base, const Rational& alexander_dd_at_one,
                  std::int64_t p, std::int64_t q);

}  // namespace twoloop
