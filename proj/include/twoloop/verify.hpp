#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "twoloop/knot_record.hpp"

namespace twoloop {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;  // empty on success
};

struct VerifyReport {
    std::size_t pair_count = 0;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// Test-only injection point: lets a harness perturb the computed 2-loop
// polynomial of T(p, q) to confirm the suite localizes the damage.
struct VerifyHooks {
    std::function<ThetaPolynomial(const ThetaPolynomial&, std::int64_t, std::int64_t)>
        perturb_torus_theta;
};

/*
 * Runs every cross-identity over the coprime pairs (p, q) with
 * 2 <= p <= pmax and 2 <= q <= qmax, in lexicographic order: reference
 * table comparisons, the cabling collapse onto the torus formula, reduced
 * cabling consistency, v3 identities, degree/genus equality, and the
 * T(p,q) = T(q,p) symmetry. Failures are report content, never exceptions.
 */
VerifyReport run_verification(std::int64_t pmax, std::int64_t qmax,
                              const VerifyHooks& hooks = {});

}  // namespace twoloop
