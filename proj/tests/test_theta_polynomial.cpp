#include <doctest.h>

#include "twoloop/theta_polynomial.hpp"
#include "twoloop/torus.hpp"

using twoloop::Direction;
using twoloop::LaurentPolynomial;
using twoloop::Rational;
using twoloop::ThetaPolynomial;

namespace {

LaurentPolynomial lterm(long c, std::int64_t k) {
    return LaurentPolynomial::monomial(Rational(c), 2 * k);
}

// c * t1^n t2^m on the true lattice
ThetaPolynomial tterm(long c, std::int64_t n, std::int64_t m) {
    return ThetaPolynomial::monomial(Rational(c), 2 * n, 2 * m);
}

}  // namespace

TEST_CASE("embedding eliminates t3") {
    const LaurentPolynomial f = lterm(1, 1) - lterm(1, 0) + lterm(1, -1);
    CHECK(ThetaPolynomial::embed(f, 1) == tterm(1, 1, 0) - tterm(1, 0, 0) + tterm(1, -1, 0));
    CHECK(ThetaPolynomial::embed(lterm(1, 1), 3) == tterm(1, -1, -1));
    CHECK(ThetaPolynomial::embed(LaurentPolynomial::one(), 2) == ThetaPolynomial::one());
}

TEST_CASE("the quotient relation t1 t2 t3 = 1") {
    const LaurentPolynomial t = lterm(1, 1);
    const ThetaPolynomial product = ThetaPolynomial::embed(t, 1) *
                                    ThetaPolynomial::embed(t, 2) *
                                    ThetaPolynomial::embed(t, 3);
    CHECK(product == ThetaPolynomial::one());

    const ThetaPolynomial a = tterm(2, 1, -1) + tterm(1, 0, 2);
    CHECK(a * ThetaPolynomial::one() == a);
    CHECK(ThetaPolynomial::embed(t, 1) * ThetaPolynomial::embed(lterm(1, -1), 1) ==
          ThetaPolynomial::one());
}

TEST_CASE("group action on keys") {
    const auto& group = twoloop::theta_symmetry_group();
    // fixed enumeration: element 0 is the identity, element 1 is epsilon
    CHECK(group[0].apply({2, 0}) == ThetaPolynomial::Key{2, 0});
    CHECK(group[1].apply({2, 1}) == ThetaPolynomial::Key{-2, -1});

    // the 3-cycle t1 -> t2 -> t3 -> t1 sends (n, m) to (-m, n - m)
    const twoloop::GroupElement* cycle = nullptr;
    for (const auto& g : group)
        if (g.permutation == std::array<int, 3>{2, 3, 1} && g.epsilon == 1) cycle = &g;
    REQUIRE(cycle != nullptr);
    CHECK(cycle->apply({2, 0}) == ThetaPolynomial::Key{0, 2});
    CHECK(cycle->apply({2, 1}) == ThetaPolynomial::Key{-1, 1});

    const ThetaPolynomial a = tterm(3, 2, 1) - tterm(1, 0, 1);
    CHECK(twoloop::group_act(group[0], a) == a);
}

TEST_CASE("symmetrization") {
    CHECK(twoloop::symmetrize(ThetaPolynomial(Rational(1))) ==
          ThetaPolynomial(Rational(12)));

    // the orbit of t1 hits each of t1, t2, t3 and their inverses twice
    const ThetaPolynomial orbit = twoloop::symmetrize(tterm(1, 1, 0));
    CHECK(orbit == tterm(2, 1, 0) + tterm(2, 0, 1) + tterm(2, -1, -1) +
                       tterm(2, -1, 0) + tterm(2, 0, -1) + tterm(2, 1, 1));

    const ThetaPolynomial s = twoloop::symmetrize(tterm(5, 2, 1) + tterm(-2, 0, 3));
    CHECK(twoloop::is_group_invariant(s));
}

TEST_CASE("specialization t1 = t, t2 = 1/t, t3 = 1") {
    // theta of the trefoil specializes to (t^(1/2)-t^(-1/2))^2 (t + 1/t)
    const ThetaPolynomial trefoil = twoloop::torus_theta(3, 2);
    CHECK(trefoil.specialize() ==
          lterm(1, 2) - lterm(2, 1) + lterm(2, 0) - lterm(2, -1) + lterm(1, -2));

    CHECK(ThetaPolynomial(Rational(7)).specialize() == lterm(7, 0));
    CHECK(twoloop::symmetrize(tterm(5, 2, 1)).specialize().is_symmetric());
}

TEST_CASE("reduction to the hat polynomial") {
    CHECK(twoloop::reduce_theta_hat(twoloop::torus_theta(3, 2)) ==
          lterm(1, 1) + lterm(1, -1));
    CHECK(twoloop::reduce_theta_hat(twoloop::torus_theta(5, 2)) ==
          lterm(2, 3) + lterm(3, 1) + lterm(3, -1) + lterm(2, -3));
    CHECK(twoloop::reduce_theta_hat(ThetaPolynomial()) == LaurentPolynomial());
}

TEST_CASE("exact division by a directional factor") {
    const LaurentPolynomial g = lterm(1, 1) - lterm(2, 0) + lterm(1, -1);
    const ThetaPolynomial b = tterm(3, 1, 2) - tterm(1, -1, 0) + tterm(2, 0, 0);

    const ThetaPolynomial a1 = ThetaPolynomial::embed(g, 1) * b;
    CHECK(twoloop::exact_divide_factor(a1, g, Direction::t1) == b);

    const ThetaPolynomial a3 = ThetaPolynomial::embed(lterm(1, 1) + lterm(1, -1), 3) * b;
    CHECK(twoloop::exact_divide_factor(a3, lterm(1, 1) + lterm(1, -1),
                                       Direction::t1t2) == b);

    CHECK_THROWS_AS(
        twoloop::exact_divide_factor(ThetaPolynomial::embed(lterm(1, 1) - lterm(1, 0), 1),
                                     lterm(1, 1) + lterm(1, 0), Direction::t1),
        twoloop::NotDivisibleError);
}

TEST_CASE("fundamental domain extraction") {
    const auto trefoil_cells = twoloop::fundamental_domain(twoloop::torus_theta(3, 2));
    REQUIRE(trefoil_cells.size() == 2);
    CHECK(trefoil_cells[0] == twoloop::DomainCell{2, 0, Rational(1)});
    CHECK(trefoil_cells[1] == twoloop::DomainCell{2, 1, Rational(-1)});

    const auto t72_cells = twoloop::fundamental_domain(twoloop::torus_theta(7, 2));
    const std::vector<twoloop::DomainCell> expected = {
        {2, 0, Rational(1)},  {2, 1, Rational(-1)}, {4, 0, Rational(2)},
        {4, 1, Rational(-2)}, {4, 2, Rational(2)},  {6, 0, Rational(3)},
        {6, 1, Rational(-3)}, {6, 2, Rational(3)},  {6, 3, Rational(-3)},
    };
    CHECK(t72_cells == expected);

    CHECK(twoloop::fundamental_domain(ThetaPolynomial()).empty());
    CHECK_THROWS_AS(twoloop::fundamental_domain(
                        ThetaPolynomial::monomial(Rational(1), 1, 0)),
                    twoloop::HalfIntegerExponentError);
}

TEST_CASE("degree in t1") {
    CHECK(twoloop::degree_t1(twoloop::torus_theta(7, 2)) == Rational(6));
    CHECK(twoloop::degree_t1(ThetaPolynomial::one()) == Rational(0));
    CHECK(twoloop::degree_t1(twoloop::torus_theta(4, 3)) == Rational(6));
    CHECK_THROWS_AS(twoloop::degree_t1(ThetaPolynomial()), twoloop::ZeroPolynomialError);
}

TEST_CASE("substitute power respects the quotient relation") {
    const ThetaPolynomial a = tterm(1, 1, 0) + tterm(1, 0, 1) + tterm(1, -1, -1);
    const ThetaPolynomial b = a.substitute_power(3);
    CHECK(b == tterm(1, 3, 0) + tterm(1, 0, 3) + tterm(1, -3, -3));
}
