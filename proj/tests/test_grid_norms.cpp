#include <cmath>
#include <stdexcept>

#include "axiswirl/grid.hpp"
#include "axiswirl/norms.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace axi;

TEST_SUITE("grid") {

TEST_CASE("staggering places cell centers and the axis face exactly") {
    Grid g = make_grid(1.0, 1.0, 4, 4);
    CHECK(g.r_face(0) == 0.0);
    CHECK(g.r_center(0) == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(g.r_center(1) == doctest::Approx(0.375).epsilon(1e-15));
    CHECK(g.r_center(2) == doctest::Approx(0.625).epsilon(1e-15));
    CHECK(g.r_center(3) == doctest::Approx(0.875).epsilon(1e-15));
    CHECK(g.z_center(0) == doctest::Approx(-0.75).epsilon(1e-15));
    CHECK(g.r_face(4) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("total quadrature weight is the cylinder volume") {
    Grid g = make_grid(2.0, 1.0, 8, 8);
    double total = 0.0;
    for (int i = 0; i < g.nr; ++i) total += g.cell_weight(i) * g.nz;
    // pi R^2 * 2Z = pi * 4 * 2
    CHECK(total == doctest::Approx(8.0 * M_PI).epsilon(1e-12));
}

TEST_CASE("refinement by 2 nests faces exactly") {
    Grid c = make_grid(1.5, 0.75, 6, 8);
    Grid f = make_grid(1.5, 0.75, 12, 16);
    for (int i = 0; i <= c.nr; ++i) CHECK(f.r_face(2 * i) == c.r_face(i));
    for (int j = 0; j <= c.nz; ++j) CHECK(f.z_face(2 * j) == c.z_face(j));
}

TEST_CASE("invalid dimensions are rejected") {
    CHECK_THROWS_AS(make_grid(0.0, 1.0, 8, 8), ConfigError);
    CHECK_THROWS_AS(make_grid(1.0, -1.0, 8, 8), ConfigError);
    CHECK_THROWS_AS(make_grid(1.0, 1.0, 3, 8), ConfigError);
    CHECK_THROWS_AS(make_grid(1.0, 1.0, 8, 2), ConfigError);
}

}  // TEST_SUITE("grid")

TEST_SUITE("norms") {

TEST_CASE("L1 of the constant 1 is the cylinder volume") {
    Grid g = make_grid(1.0, 0.5, 32, 32);
    ScalarField f = make_field(g, Loc::Cell, Parity::Even);
    f.fill(1.0);
    CHECK(lp_norm(f, 1.0) == doctest::Approx(M_PI).epsilon(1e-12));
}

TEST_CASE("L1 of f = r matches the analytic integral 2 pi / 3") {
    Grid g = make_grid(1.0, 0.5, 64, 16);
    ScalarField f = make_field(g, Loc::Cell, Parity::Odd);
    f.sample([](double r, double) { return r; });
    // midpoint quadrature integrates r * 2 pi r exactly up to O(h^2)
    CHECK(lp_norm(f, 1.0) == doctest::Approx(2.0 * M_PI / 3.0).epsilon(1e-4));
}

TEST_CASE("Gaussian L2 squared matches the closed form (pi/2)^{3/2}") {
    // ||exp(-r^2-z^2)||_2^2 over R^3 = (pi/2) sqrt(pi/2); the box R = Z = 6
    // truncates only exp(-36) tails.
    const double exact = 0.5 * M_PI * std::sqrt(0.5 * M_PI);
    Grid g = make_grid(6.0, 6.0, 128, 128);
    ScalarField f = make_field(g, Loc::Cell, Parity::Even);
    f.sample(axitest::gauss);
    const double n2 = lp_norm(f, 2.0);
    CHECK(n2 * n2 == doctest::Approx(exact).epsilon(5e-4));

    SUBCASE("error shrinks at second order under refinement") {
        Grid g2 = make_grid(6.0, 6.0, 256, 256);
        ScalarField f2 = make_field(g2, Loc::Cell, Parity::Even);
        f2.sample(axitest::gauss);
        const double e1 = std::abs(n2 * n2 - exact);
        const double n22 = lp_norm(f2, 2.0);
        const double e2 = std::abs(n22 * n22 - exact);
        CHECK(e1 / e2 > 3.0);
        CHECK(e1 / e2 < 5.0);
    }
}

TEST_CASE("absolute homogeneity and the triangle inequality") {
    Grid g = make_grid(3.0, 3.0, 24, 24);
    ScalarField f = make_field(g, Loc::Cell, Parity::Even);
    f.sample([](double r, double z) { return std::sin(3 * r) * std::cos(2 * z); });
    ScalarField h = make_field(g, Loc::Cell, Parity::Even);
    h.sample([](double r, double z) { return r * z - 0.3 * r * r; });
    for (double p : {1.0, 2.0, kPInf}) {
        CHECK(lp_norm(f, p) * 2.5 == doctest::Approx(2.5 * lp_norm(f, p)).epsilon(1e-14));
        ScalarField sum = f;
        for (std::size_t k = 0; k < sum.v.size(); ++k) sum.v[k] += h.v[k];
        CHECK(lp_norm(sum, p) <= lp_norm(f, p) + lp_norm(h, p) + 1e-12);
    }
    CHECK_THROWS_AS(lp_norm(f, 0.5), std::domain_error);
}

TEST_CASE("Linf is the max over samples") {
    Grid g = make_grid(1.0, 1.0, 8, 8);
    ScalarField f = make_field(g, Loc::Cell, Parity::Even);
    f.fill(0.0);
    f.at(3, 5) = -7.25;
    CHECK(lp_norm(f, kPInf) == 7.25);
}

TEST_CASE("hardy weight s = 0 reduces to the plain norm") {
    Grid g = make_grid(4.0, 4.0, 32, 32);
    ScalarField f = make_field(g, Loc::Cell, Parity::Even);
    f.sample(axitest::gauss);
    CHECK(hardy_weighted_norm(f, 0.0, 3.0) ==
          doctest::Approx(lp_norm(f, 3.0)).epsilon(1e-14));
}

TEST_CASE("hardy norm of zero is zero; exponent domain is enforced") {
    Grid g = make_grid(4.0, 4.0, 16, 16);
    ScalarField f = make_field(g, Loc::Cell, Parity::Even);
    f.fill(0.0);
    CHECK(hardy_weighted_norm(f, 1.0, 3.0) == 0.0);
    CHECK_THROWS_AS(hardy_weighted_norm(f, 1.0, 1.5), std::domain_error);
    CHECK_THROWS_AS(hardy_weighted_norm(f, 1.0, 5.0), std::domain_error);
    CHECK_THROWS_AS(hardy_weighted_norm(f, 2.5, 3.0), std::domain_error);
}

TEST_CASE("hardy norm of r exp(-r^2-z^2), s=1, q=3 is refinement-stable") {
    auto value = [](int n) {
        Grid g = make_grid(6.0, 6.0, n, n);
        ScalarField f = make_field(g, Loc::Cell, Parity::Odd);
        f.sample([](double r, double z) { return r * axitest::gauss(r, z); });
        return hardy_weighted_norm(f, 1.0, 3.0);
    };
    const double a = value(128), b = value(256);
    CHECK(a > 0.0);
    CHECK(std::abs(a - b) / b < 1e-3);
}

}  // TEST_SUITE("norms")
