#include "twoloop/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "twoloop/reference_tables.hpp"
#include "twoloop/vassiliev.hpp"

namespace twoloop {

namespace {

std::string cell_text(std::int64_t n, std::int64_t m) {
    return "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

// Compare the fundamental domain of a computed polynomial against reference
// integer cells; returns an empty string on equality and the first offending
// cell otherwise.
std::string compare_domain_cells(const ThetaPolynomial& computed,
                                 const std::vector<reference::DomainCellRef>& cells) {
    std::map<std::pair<std::int64_t, std::int64_t>, Rational> expected;
    for (const auto& c : cells)
        expected[{c.n, c.m}] = Rational(c.coefficient);

    for (const auto& [key, value] : expected) {
        const Rational got = computed.coefficient(2 * key.first, 2 * key.second);
        if (got != value)
            return "cell " + cell_text(key.first, key.second) + ": expected " +
                   value.str() + ", got " + got.str();
    }
    // No stray nonzero cells in the domain either.
    for (const auto& cell : fundamental_domain(computed)) {
        if (!expected.count({cell.n, cell.m}))
            return "cell " + cell_text(cell.n, cell.m) + ": expected 0, got " +
                   cell.coefficient.str();
    }
    return {};
}

}  // namespace

VerifyReport run_verification(std::int64_t pmax, std::int64_t qmax,
                              const VerifyHooks& hooks) {
    VerifyReport report;

    std::map<std::pair<std::int64_t, std::int64_t>, ThetaPolynomial> theta_cache;
    auto torus_theta_hooked = [&](std::int64_t p, std::int64_t q) {
        auto it = theta_cache.find({p, q});
        if (it == theta_cache.end())
            it = theta_cache.emplace(std::make_pair(p, q), torus_theta(p, q)).first;
        if (hooks.perturb_torus_theta) return hooks.perturb_torus_theta(it->second, p, q);
        return it->second;
    };

    const KnotRecord unknot = unknot_record();
    const KnotRecord trefoil = torus_record(3, 2);
    const Rational trefoil_v3 = v3(trefoil);
    const Rational trefoil_dd = alexander_second_derivative_at_one(trefoil.alexander);

    auto run = [&](const std::string& name, auto&& body) {
        CheckResult result{name, false, ""};
        try {
            result.detail = body();
            result.passed = result.detail.empty();
        } catch (const std::exception& e) {
            result.passed = false;
            result.detail = e.what();
        }
        report.checks.push_back(std::move(result));
    };

    for (std::int64_t p = 2; p <= pmax; ++p) {
        for (std::int64_t q = 2; q <= qmax; ++q) {
            if (std::gcd(p, q) != 1) continue;
            ++report.pair_count;
            const std::string tag =
                "T(" + std::to_string(p) + "," + std::to_string(q) + ")";

            const ThetaPolynomial theta = torus_theta_hooked(p, q);

            run(tag + ": equals T(q,p)", [&] {
                return theta == torus_theta_hooked(q, p)
                           ? std::string{}
                           : "2-loop polynomials of T(p,q) and T(q,p) differ";
            });

            run(tag + ": degree equals (p-1)(q-1)", [&] {
                const Rational expected((p - 1) * (q - 1));
                const Rational got = degree_t1(theta);
                return got == expected ? std::string{}
                                       : "expected " + expected.str() + ", got " + got.str();
            });

            run(tag + ": integral coefficients and exponents", [&] {
                if (!theta.has_integer_exponents()) return std::string("half-integer exponent present");
                if (!theta.has_integer_coefficients()) return std::string("non-integer coefficient present");
                return std::string{};
            });

            run(tag + ": specialization vanishes at t = 1", [&] {
                const Rational value = theta.specialize().evaluate_at_one();
                return value == Rational(0) ? std::string{}
                                            : "got " + value.str();
            });

            run(tag + ": reduced polynomial routes agree", [&] {
                const LaurentPolynomial direct = torus_theta_hat(p, q);
                const LaurentPolynomial reduced = reduce_theta_hat(theta);
                if (direct != reduced)
                    return std::string("reduction of theta differs from the direct formula");
                if (q == 2 || q == 3) {
                    if (torus_theta_hat_closed_form(p, q) != direct)
                        return std::string("closed form for q = ") + std::to_string(q) +
                               " differs";
                }
                if (p == 2 || p == 3) {
                    if (torus_theta_hat_closed_form(q, p) != direct)
                        return std::string("closed form for q = ") + std::to_string(p) +
                               " (swapped) differs";
                }
                return std::string{};
            });

            run(tag + ": psi quotient forms agree", [&] {
                if (torus_psi(p, q) != torus_psi_quotient_form(p, q))
                    return std::string("forms differ for (p,q)");
                if (torus_psi(q, p) != torus_psi_quotient_form(q, p))
                    return std::string("forms differ for (q,p)");
                return std::string{};
            });

            run(tag + ": v3 closed formula", [&] {
                const Rational from_hat =
                    Rational(1, 2) * reduce_theta_hat(theta).evaluate_at_one();
                const Rational closed = v3_torus(p, q);
                return from_hat == closed
                           ? std::string{}
                           : "hat route " + from_hat.str() + " vs closed " + closed.str();
            });

            run(tag + ": phi derivative identity at t = 1", [&] {
                const Rational lhs = torus_phi(q, p).derivative().evaluate_at_one();
                const Rational rhs =
                    Rational(q) * (Rational(1) - Rational(p) * Rational(p)) / Rational(6);
                if (lhs != rhs) return "got " + lhs.str() + ", expected " + rhs.str();
                const Rational lhs2 = torus_phi(p, q).derivative().evaluate_at_one();
                const Rational rhs2 =
                    Rational(p) * (Rational(1) - Rational(q) * Rational(q)) / Rational(6);
                if (lhs2 != rhs2) return "got " + lhs2.str() + ", expected " + rhs2.str();
                return std::string{};
            });

            run(tag + ": alexander cabling collapse", [&] {
                return cable_alexander(unknot, p, q) == torus_alexander(p, q)
                           ? std::string{}
                           : "cable of the unknot differs from the torus formula";
            });

            run(tag + ": cabling collapse", [&] {
                return cable_theta(unknot, p, q) == theta
                           ? std::string{}
                           : "cable of the unknot differs from the torus formula";
            });

            ThetaPolynomial trefoil_cabled;
            run(tag + ": reduced cabling consistency (trefoil base)", [&] {
                trefoil_cabled = cable_theta(trefoil, p, q);
                const LaurentPolynomial reduced = reduce_theta_hat(trefoil_cabled);
                const LaurentPolynomial direct = cable_theta_hat(trefoil, p, q);
                if (reduced != direct)
                    return std::string("reduction of the cabled theta differs");
                const Rational v3_via_theta =
                    Rational(1, 2) * reduced.evaluate_at_one();
                const Rational v3_closed = v3_cable(trefoil_v3, trefoil_dd, p, q);
                if (v3_via_theta != v3_closed)
                    return "v3 " + v3_via_theta.str() + " vs closed formula " +
                           v3_closed.str();
                return std::string{};
            });

            // Integrality of cabled coefficients is reported as an
            // observation, never asserted: only torus knots carry a proved
            // integrality statement.
            if (!trefoil_cabled.is_zero())
                report.checks.push_back(
                    {tag + ": cabled theta integrality (observation)", true,
                     trefoil_cabled.has_integer_coefficients()
                         ? "integer coefficients"
                         : "non-integer coefficients present"});

            if (const auto* table = reference::find_domain_table(p, q)) {
                run(tag + ": reference domain table", [&] {
                    return compare_domain_cells(theta, table->cells);
                });
            }

            if (p == 7 && q == 2) {
                run(tag + ": reference full coefficient grid", [&] {
                    const auto& grid = reference::full_grid_7_2();
                    for (int m = grid.m_max; m >= grid.m_min; --m) {
                        for (int n = grid.n_min; n <= grid.n_max; ++n) {
                            const int expected =
                                grid.values[grid.m_max - m][n - grid.n_min];
                            const Rational got = theta.coefficient(2 * n, 2 * m);
                            if (got != Rational(expected))
                                return "cell " + cell_text(n, m) + ": expected " +
                                       std::to_string(expected) + ", got " + got.str();
                        }
                    }
                    // Nothing outside the printed window either.
                    for (const auto& [key, c] : theta.terms()) {
                        const std::int64_t n = key.first / 2, m = key.second / 2;
                        if (n < grid.n_min || n > grid.n_max || m < grid.m_min ||
                            m > grid.m_max)
                            return "unexpected nonzero cell " + cell_text(n, m);
                    }
                    return std::string{};
                });
            }

            if (const auto* row = reference::find_theta_hat_table(p, q)) {
                run(tag + ": reference reduced polynomial table", [&] {
                    const LaurentPolynomial hat = reduce_theta_hat(theta);
                    LaurentPolynomial expected;
                    for (const auto& [exp, coeff] : row->nonnegative_terms) {
                        expected += LaurentPolynomial::monomial(Rational(coeff), 2 * exp);
                        if (exp != 0)
                            expected +=
                                LaurentPolynomial::monomial(Rational(coeff), -2 * exp);
                    }
                    if (!hat.is_symmetric())
                        return std::string("reduced polynomial is not symmetric");
                    if (hat != expected) {
                        for (const auto& [e, c] : expected.terms()) {
                            if (hat.coefficient(e) != c)
                                return "coefficient of t^" + std::to_string(e / 2) +
                                       ": expected " + c.str() + ", got " +
                                       hat.coefficient(e).str();
                        }
                        for (const auto& [e, c] : hat.terms())
                            if (expected.coefficient(e) != c)
                                return "coefficient of t^" + std::to_string(e / 2) +
                                       ": expected 0, got " + c.str();
                    }
                    return std::string{};
                });
            }
        }
    }

    return report;
}

}  // namespace twoloop
