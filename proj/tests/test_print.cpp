#include <doctest.h>

#include "twoloop/print.hpp"
#include "twoloop/torus.hpp"

using twoloop::LaurentPolynomial;
using twoloop::Rational;

namespace {

LaurentPolynomial lterm(long c, std::int64_t k) {
    return LaurentPolynomial::monomial(Rational(c), 2 * k);
}

}  // namespace

TEST_CASE("pretty printing") {
    CHECK(twoloop::pretty(LaurentPolynomial()) == "0");
    CHECK(twoloop::pretty(LaurentPolynomial::one()) == "1");
    CHECK(twoloop::pretty(lterm(-3, 0)) == "-3");
    CHECK(twoloop::pretty(twoloop::torus_theta_hat(7, 2)) ==
          "3t^5 + 5t^3 + 6t + 6t^-1 + 5t^-3 + 3t^-5");
    CHECK(twoloop::pretty(twoloop::torus_alexander(3, 2)) == "t - 1 + t^-1");
    CHECK(twoloop::pretty(twoloop::torus_alexander(5, 2)) ==
          "t^2 - t + 1 - t^-1 + t^-2");
    CHECK(twoloop::pretty(LaurentPolynomial::monomial(Rational(1, 2), 1)) ==
          "1/2t^1/2");
    CHECK(twoloop::pretty(lterm(1, 1) + lterm(1, -1)) == "t + t^-1");
    CHECK(twoloop::pretty(-lterm(2, 3) + lterm(5, 0)) == "-2t^3 + 5");
}

TEST_CASE("domain triples listing") {
    CHECK(twoloop::render_domain_triples(twoloop::torus_theta(3, 2)) ==
          "2 0 1\n2 1 -1\n");
}

TEST_CASE("domain table layout for the trefoil") {
    // row m=1 holds only the cell at n=2; row m=0 shows dots at n=0,1
    CHECK(twoloop::render_domain_table(twoloop::torus_theta(3, 2)) ==
          "        -1\n"
          " ·   ·   1\n");
    CHECK(twoloop::render_domain_table(twoloop::ThetaPolynomial()) == "(empty)\n");
}

TEST_CASE("grid table shape") {
    const std::string grid = twoloop::render_grid_table(twoloop::torus_theta(3, 2));
    // full orbit of the two domain cells: 5x5 grid plus header
    CHECK(grid ==
          "n     -2  -1   0   1   2\n"
          "\n"
          "m=2    ·   ·   1  -1   1\n"
          "m=1    ·  -1   ·   ·  -1\n"
          "m=0    1   ·   ·   ·   1\n"
          "m=-1  -1   ·   ·  -1   ·\n"
          "m=-2   1  -1   1   ·   ·\n");
}
