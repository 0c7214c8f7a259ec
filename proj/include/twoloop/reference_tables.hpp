#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace twoloop::reference {

/*
 * Published coefficient tables for the 2-loop polynomial of small torus
 * knots, embedded as ground truth for the verification suite. Exponents
 * here are true integers (not the doubled internal encoding).
 */

struct DomainCellRef {
    int n;
    int m;
    int coefficient;
};

// Fundamental-domain coefficients { 0 <= 2m <= n } of the 2-loop polynomial,
// for the pairs with a published table.
struct DomainTableRef {
    int p;
    int q;
    std::vector<DomainCellRef> cells;  // nonzero cells, row-major as printed
};

const std::vector<DomainTableRef>& domain_tables();
const DomainTableRef* find_domain_table(std::int64_t p, std::int64_t q);

// Full coefficient grid of the 2-loop polynomial of T(7,2): rows run
// m = 6 down to -6, columns n = -6 .. 6.
struct FullGridRef {
    int n_min, n_max;
    int m_min, m_max;
    // values[row][col] with row 0 at m = m_max, col 0 at n = n_min
    std::vector<std::vector<int>> values;
};

const FullGridRef& full_grid_7_2();

// Nonnegative-power part of the reduced 2-loop polynomial; the rest is the
// mirror under t -> 1/t.
struct ThetaHatRef {
    int p;
    int q;
    std::vector<std::pair<int, int>> nonnegative_terms;  // (exponent, coefficient)
};

const std::vector<ThetaHatRef>& theta_hat_tables();
const ThetaHatRef* find_theta_hat_table(std::int64_t p, std::int64_t q);

}  // namespace twoloop::reference
