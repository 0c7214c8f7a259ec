#include <doctest.h>

#include "twoloop/verify.hpp"

TEST_CASE("the verification sweep passes on a small range") {
    const twoloop::VerifyReport report = twoloop::run_verification(5, 4);
    CHECK(report.pair_count == 7);  // coprime pairs in [2,5] x [2,4]
    CHECK(report.all_passed());
    for (const auto& check : report.checks) CHECK_MESSAGE(check.passed, check.name,
                                                          ": ", check.detail);
}

TEST_CASE("an empty range reports zero pairs") {
    const twoloop::VerifyReport report = twoloop::run_verification(2, 2);
    CHECK(report.pair_count == 0);
    CHECK(report.checks.empty());
    CHECK(report.all_passed());
}

TEST_CASE("an injected sign flip is localized to the exact cell") {
    twoloop::VerifyHooks hooks;
    hooks.perturb_torus_theta = [](const twoloop::ThetaPolynomial& theta, std::int64_t p,
                                   std::int64_t q) {
        if (p != 3 || q != 2) return theta;
        // flip the sign of the (2, 1) cell
        return theta - twoloop::ThetaPolynomial::monomial(twoloop::Rational(-2), 4, 2);
    };
    const twoloop::VerifyReport report = twoloop::run_verification(3, 2, hooks);
    CHECK(!report.all_passed());

    bool found_cell = false;
    for (const auto& check : report.checks) {
        if (check.name == "T(3,2): reference domain table") {
            CHECK(!check.passed);
            CHECK(check.detail == "cell (2,1): expected -1, got 1");
            found_cell = true;
        }
    }
    CHECK(found_cell);
}
