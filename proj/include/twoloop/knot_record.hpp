#pragma once

#include <string>

#include "twoloop/torus.hpp"

namespace twoloop {

/*
 * A named knot carrying the two invariants the cabling formulas consume:
 * the normalized Alexander polynomial and the symmetrized 2-loop
 * polynomial theta (stored at 12 times the usual normalization, in the
 * t3-eliminated basis). Valid records satisfy
 *   - alexander symmetric, integer exponents, alexander(1) = 1;
 *   - theta invariant under the 12-element theta-graph group and
 *     vanishing at t1 = t2 = t3 = 1.
 */
struct KnotRecord {
    std::string name;
    LaurentPolynomial alexander;
    ThetaPolynomial theta;
    std::string provenance;
};

// Throws ValidationError naming the first violated invariant.
void validate_record(const KnotRecord& record);

KnotRecord unknot_record();

// The (p, q) torus knot record, by definition the (p, q) cable of the unknot.
KnotRecord torus_record(std::int64_t p, std::int64_t q);

// Alexander polynomial of the (p, q) cable: Delta_{T(p,q)}(t) Delta_K(t^p).
LaurentPolynomial cable_alexander(const KnotRecord& k, std::int64_t p, std::int64_t q);

// 2-loop polynomial of the (p, q) cable of k.
ThetaPolynomial cable_theta(const KnotRecord& k, std::int64_t p, std::int64_t q);

// Reduced 2-loop polynomial of the (p, q) cable of k, computed from the
// univariate reduction formula (independent of cable_theta).
LaurentPolynomial cable_theta_hat(const KnotRecord& k, std::int64_t p, std::int64_t q);

// Bundles the two cabling formulas into a new record named "<k>^(p,q)".
KnotRecord cable_record(const KnotRecord& k, std::int64_t p, std::int64_t q);

}  // namespace twoloop
