#pragma once

#include <cstdint>

#include "twoloop/rational_function.hpp"
#include "twoloop/theta_polynomial.hpp"

namespace twoloop {

/*
 * Cable/torus parameters. Only positive coprime pairs are accepted; mirror
 * knots (negative winding) carry sign conventions this library does not
 * model, so they are rejected rather than guessed. p = 1 or q = 1 is the
 * unknot and every formula degenerates accordingly.
 */
struct TorusParams {
    std::int64_t p;
    std::int64_t q;
};

// Throws InvalidParamsError for p < 1, q < 1 or gcd(p, q) != 1.
TorusParams validated_torus_params(std::int64_t p, std::int64_t q);

// (t^(pq/2) - t^(-pq/2)) (t^(1/2) - t^(-1/2))
// -------------------------------------------- ; symmetric, value 1 at t = 1.
// (t^(p/2) - t^(-p/2)) (t^(q/2) - t^(-q/2))
LaurentPolynomial torus_alexander(std::int64_t p, std::int64_t q);

// (t^(p/2)+t^(-p/2))/(t^(p/2)-t^(-p/2)) - q (t^(pq/2)+t^(-pq/2))/(t^(pq/2)-t^(-pq/2));
// reduced, regular at t = 1 with value 0.
RationalFunction torus_phi(std::int64_t p, std::int64_t q);

// psi = alexander * phi.
RationalFunction torus_psi(std::int64_t p, std::int64_t q);

// The same function assembled as a single quotient over
// (t^(p/2)-t^(-p/2))(t^(q/2)-t^(-q/2)); an independent route kept for
// cross-checking against torus_psi.
RationalFunction torus_psi_quotient_form(std::int64_t p, std::int64_t q);

// Numerator of psi_{p,q} over the denominator
// (t^(p/2)-t^(-p/2))(t^(q/2)-t^(-q/2)); a Laurent polynomial.
LaurentPolynomial torus_psi_numerator(std::int64_t p, std::int64_t q);

// The 2-loop polynomial of T(p, q):
//   -1/4 sum over {i,j,k}={1,2,3} of psi_{p,q}(t_i) psi_{q,p}(t_j) Delta(t_k),
// cleared to an exact polynomial with integer coefficients.
ThetaPolynomial torus_theta(std::int64_t p, std::int64_t q);

// Reduced 2-loop polynomial psi_{p,q} psi_{q,p} / (2 (t^(1/2)-t^(-1/2))^2).
LaurentPolynomial torus_theta_hat(std::int64_t p, std::int64_t q);

// Independent closed forms for q = 2 and q = 3, used as oracles against
// torus_theta_hat. Throws InvalidParamsError for other q.
LaurentPolynomial torus_theta_hat_closed_form(std::int64_t p, std::int64_t q);

}  // namespace twoloop
