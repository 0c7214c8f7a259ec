#pragma once

#include <string>

#include "twoloop/theta_polynomial.hpp"

namespace twoloop {

// Human-readable polynomial: descending powers, explicit +/- separators,
// "t^k" exponents (half-integers as "t^a/2"), rational coefficients "a/b".
// Example: "3t^5 + 5t^3 + 6t + 6t^-1 + 5t^-3 + 3t^-5".
std::string pretty(const LaurentPolynomial& f);

// One "<n> <m> <coeff>" line per fundamental-domain cell.
std::string render_domain_triples(const ThetaPolynomial& theta);

// Full coefficient matrix: column header n, row labels "m=...", top row at
// the highest m, middle dot for zero cells.
std::string render_grid_table(const ThetaPolynomial& theta);

// The restriction to the cone 0 <= 2m <= n: rows m from the top down to 0,
// columns n = 0..max; cells outside the cone are blank, zeros inside are
// dots. The bottom-left dot sits at (n, m) = (0, 0).
std::string render_domain_table(const ThetaPolynomial& theta);

}  // namespace twoloop
