#include "twoloop/reference_tables.hpp"

namespace twoloop::reference {

const std::vector<DomainTableRef>& domain_tables() {
    static const std::vector<DomainTableRef> tables = {
        {3, 2, {
            {2, 1, -1},
            {2, 0, 1},
        }},
        {5, 2, {
            {4, 2, 2},
            {2, 1, -1}, {4, 1, -2},
            {2, 0, 1}, {4, 0, 2},
        }},
        {7, 2, {
            {6, 3, -3},
            {4, 2, 2}, {6, 2, 3},
            {2, 1, -1}, {4, 1, -2}, {6, 1, -3},
            {2, 0, 1}, {4, 0, 2}, {6, 0, 3},
        }},
        {4, 3, {
            {6, 3, 3},
            {4, 2, 3}, {5, 2, -3},
            {2, 1, 1}, {3, 1, -2}, {5, 1, 3}, {6, 1, -3},
            {2, 0, -1}, {3, 0, 4}, {4, 0, -3}, {6, 0, 3},
        }},
        {5, 3, {
            {8, 4, -4},
            {6, 3, -4}, {8, 3, 4},
            {4, 2, -6}, {5, 2, 3}, {6, 2, 4}, {7, 2, -4},
            {2, 1, -2}, {3, 1, 1}, {4, 1, 3}, {5, 1, -6}, {7, 1, 4}, {8, 1, -4},
            {2, 0, 2}, {3, 0, -2}, {5, 0, 6}, {6, 0, -4}, {8, 0, 4},
        }},
        {7, 3, {
            {12, 6, 6},
            {10, 5, 6}, {11, 5, -6},
            {8, 4, 10}, {9, 4, -5}, {11, 4, 6}, {12, 4, -6},
            {6, 3, 12}, {7, 3, -5}, {8, 3, -5}, {9, 3, 10}, {10, 3, -6}, {12, 3, 6},
            {4, 2, 6}, {5, 2, -5}, {6, 2, -4}, {7, 2, 10}, {8, 2, -10}, {10, 2, 6},
            {11, 2, -6},
            {2, 1, 2}, {3, 1, -3}, {4, 1, -1}, {5, 1, 6}, {6, 1, -8}, {8, 1, 10},
            {9, 1, -10}, {11, 1, 6}, {12, 1, -6},
            {2, 0, -2}, {3, 0, 6}, {4, 0, -4}, {5, 0, -2}, {6, 0, 12}, {7, 0, -10},
            {9, 0, 10}, {10, 0, -6}, {12, 0, 6},
        }},
        {5, 4, {
            {12, 6, -6},
            {10, 5, -6}, {11, 5, 6},
            {8, 4, 9}, {11, 4, -6}, {12, 4, 6},
            {6, 3, 1}, {7, 3, -5}, {10, 3, 6}, {11, 3, -6},
            {4, 2, -5}, {5, 2, 4}, {6, 2, -4}, {7, 2, 5}, {8, 2, -5},
            {2, 1, 1}, {3, 1, 1}, {4, 1, -2}, {6, 1, 3}, {7, 1, 1}, {8, 1, -4},
            {11, 1, 6}, {12, 1, -6},
            {2, 0, -1}, {3, 0, -2}, {4, 0, 9}, {5, 0, -8}, {6, 0, 1}, {7, 0, -2},
            {8, 0, 9}, {10, 0, -6}, {12, 0, 6},
        }},
        {7, 4, {
            {18, 9, -9},
            {16, 8, -9}, {17, 8, 9},
            {14, 7, 15}, {17, 7, -9}, {18, 7, 9},
            {12, 6, 15}, {13, 6, -15}, {16, 6, 9}, {17, 6, -9},
            {10, 5, -6}, {11, 5, -6}, {13, 5, 15}, {14, 5, -15}, {17, 5, 9},
            {18, 5, -9},
            {8, 4, -18}, {9, 4, 7}, {10, 4, -1}, {11, 4, 12}, {12, 4, -15},
            {13, 4, 8}, {14, 4, 7}, {16, 4, -9}, {18, 4, 9},
            {6, 3, -8}, {7, 3, 10}, {8, 3, 5}, {9, 3, -6}, {10, 3, 1}, {12, 3, 7},
            {13, 3, -15}, {14, 3, 8}, {16, 3, 9}, {17, 3, -9},
            {4, 2, 5}, {5, 2, -5}, {6, 2, 4}, {7, 2, -11}, {8, 2, 13}, {9, 2, -13},
            {10, 2, 7}, {11, 2, -7}, {12, 2, 8}, {13, 2, -8},
            {2, 1, 2}, {3, 1, -4}, {4, 1, 2}, {5, 1, 4}, {6, 1, 2}, {7, 1, -9},
            {9, 1, 11}, {10, 1, -6}, {11, 1, -5}, {13, 1, 15}, {14, 1, -15},
            {17, 1, 9}, {18, 1, -9},
            {2, 0, -2}, {3, 0, 8}, {4, 0, -9}, {5, 0, 2}, {6, 0, -4}, {7, 0, 20},
            {8, 0, -18}, {9, 0, 2}, {10, 0, 4}, {11, 0, 12}, {12, 0, -15},
            {14, 0, 15}, {16, 0, -9}, {18, 0, 9},
        }},
    };
    return tables;
}

const DomainTableRef* find_domain_table(std::int64_t p, std::int64_t q) {
    for (const auto& t : domain_tables())
        if (t.p == p && t.q == q) return &t;
    return nullptr;
}

const FullGridRef& full_grid_7_2() {
    static const FullGridRef grid = {
        -6, 6, -6, 6,
        {
            // m = 6 .. -6, n = -6 .. 6
            {0, 0, 0, 0, 0, 0, 3, -3, 3, -3, 3, -3, 3},
            {0, 0, 0, 0, 0, -3, 0, 0, 0, 0, 0, 0, -3},
            {0, 0, 0, 0, 3, 0, 2, -2, 2, -2, 2, 0, 3},
            {0, 0, 0, -3, 0, -2, 0, 0, 0, 0, -2, 0, -3},
            {0, 0, 3, 0, 2, 0, 1, -1, 1, 0, 2, 0, 3},
            {0, -3, 0, -2, 0, -1, 0, 0, -1, 0, -2, 0, -3},
            {3, 0, 2, 0, 1, 0, 0, 0, 1, 0, 2, 0, 3},
            {-3, 0, -2, 0, -1, 0, 0, -1, 0, -2, 0, -3, 0},
            {3, 0, 2, 0, 1, -1, 1, 0, 2, 0, 3, 0, 0},
            {-3, 0, -2, 0, 0, 0, 0, -2, 0, -3, 0, 0, 0},
            {3, 0, 2, -2, 2, -2, 2, 0, 3, 0, 0, 0, 0},
            {-3, 0, 0, 0, 0, 0, 0, -3, 0, 0, 0, 0, 0},
            {3, -3, 3, -3, 3, -3, 3, 0, 0, 0, 0, 0, 0},
        },
    };
    return grid;
}

const std::vector<ThetaHatRef>& theta_hat_tables() {
    static const std::vector<ThetaHatRef> tables = {
        {3, 2, {{1, 1}}},
        {5, 2, {{1, 3}, {3, 2}}},
        {7, 2, {{1, 6}, {3, 5}, {5, 3}}},
        {9, 2, {{1, 10}, {3, 9}, {5, 7}, {7, 4}}},
        {4, 3, {{1, 3}, {2, 4}, {5, 3}}},
        {5, 3, {{1, 6}, {2, 4}, {4, 6}, {7, 4}}},
        {7, 3, {{1, 10}, {2, 12}, {4, 6}, {5, 12}, {8, 10}, {11, 6}}},
        {8, 3, {{1, 15}, {2, 12}, {4, 16}, {5, 7}, {7, 15}, {10, 12}, {13, 7}}},
        {10, 3, {{1, 21}, {2, 24}, {4, 16}, {5, 25}, {7, 9}, {8, 24}, {11, 21},
                 {14, 16}, {17, 9}}},
        {5, 4, {{1, 6}, {2, 12}, {3, 9}, {6, 8}, {7, 9}, {11, 6}}},
        {7, 4, {{1, 15}, {2, 24}, {3, 9}, {5, 18}, {6, 20}, {9, 18}, {10, 12},
                {13, 15}, {17, 9}}},
        {9, 4, {{1, 21}, {2, 40}, {3, 27}, {5, 12}, {6, 36}, {7, 30}, {10, 28},
                {11, 30}, {14, 16}, {15, 27}, {19, 21}, {23, 12}}},
        {6, 5, {{1, 10}, {2, 24}, {3, 27}, {4, 16}, {7, 15}, {8, 24}, {9, 18},
                {13, 15}, {14, 16}, {19, 10}}},
        {7, 5, {{1, 36}, {2, 12}, {3, 20}, {4, 30}, {6, 36}, {8, 24}, {9, 18},
                {11, 30}, {13, 24}, {16, 18}, {18, 20}, {23, 12}}},
        {8, 5, {{1, 45}, {2, 24}, {3, 14}, {4, 48}, {6, 36}, {7, 30}, {9, 45},
                {11, 21}, {12, 32}, {14, 36}, {17, 30}, {19, 21}, {22, 24},
                {27, 14}}},
        {9, 5, {{1, 28}, {2, 60}, {3, 54}, {4, 16}, {6, 36}, {7, 60}, {8, 42},
                {11, 40}, {12, 54}, {13, 24}, {16, 40}, {17, 42}, {21, 36},
                {22, 24}, {26, 28}, {31, 16}}},
    };
    return tables;
}

const ThetaHatRef* find_theta_hat_table(std::int64_t p, std::int64_t q) {
    for (const auto& t : theta_hat_tables())
        if (t.p == p && t.q == q) return &t;
    return nullptr;
}

}  // namespace twoloop::reference
