#include <cmath>
#include <vector>

#include "axiswirl/kernels.hpp"
#include "axiswirl/norms.hpp"
#include "axiswirl/scenarios.hpp"
#include "axiswirl/solver.hpp"
#include "doctest.h"

using namespace axi;

namespace {

// Restores the global kernel switch even when a check fails.
struct KernelGuard {
    ~KernelGuard() { kernels::use_parallel_kernels(true); }
};

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("parallel and serial row loops write identical data") {
    KernelGuard guard;
    const int n = 257, m = 113;
    auto fill = [&](std::vector<double>& out) {
        kernels::rows(n, [&](int i) {
            for (int j = 0; j < m; ++j)
                out[std::size_t(i) * m + j] = std::sin(0.1 * i) * std::cos(0.2 * j) + i;
        });
    };
    std::vector<double> a(std::size_t(n) * m), b(std::size_t(n) * m);
    kernels::use_parallel_kernels(true);
    fill(a);
    kernels::use_parallel_kernels(false);
    fill(b);
    CHECK(a == b);
}

TEST_CASE("parallel and serial reductions agree bit-for-bit") {
    KernelGuard guard;
    const int n = 311, m = 97;
    auto total = [&] {
        return kernels::reduce(n, [&](int i) {
            return kernels::kahan_sum(m, [&](int j) {
                return std::exp(-0.001 * (i * m + j)) * ((i + j) % 2 ? 1.0 : -1.0);
            });
        });
    };
    kernels::use_parallel_kernels(true);
    const double p = total();
    kernels::use_parallel_kernels(false);
    const double s = total();
    CHECK(p == s);
}

TEST_CASE("a full solver step is bitwise independent of the kernel path") {
    KernelGuard guard;
    Grid g = make_grid(4.0, 4.0, 48, 48);
    auto advance = [&] {
        State s = random_localized(g, 3);
        for (int k = 0; k < 3; ++k) step(s, 5e-4);
        return s;
    };
    kernels::use_parallel_kernels(true);
    State a = advance();
    kernels::use_parallel_kernels(false);
    State b = advance();
    CHECK(a.ur.v == b.ur.v);
    CHECK(a.uth.v == b.uth.v);
    CHECK(a.u3.v == b.u3.v);
    CHECK(a.rho.v == b.rho.v);
    CHECK(a.pi.v == b.pi.v);
}

TEST_CASE("norms agree bit-for-bit across kernel paths") {
    KernelGuard guard;
    Grid g = make_grid(6.0, 6.0, 96, 96);
    ScalarField f = make_field(g, Loc::Cell, Parity::Even);
    f.sample([](double r, double z) { return std::exp(-r * r - z * z) * (1 + r - z); });
    kernels::use_parallel_kernels(true);
    const double p1 = lp_norm(f, 1.0), p2 = lp_norm(f, 2.0), g2 = grad_l2_sq(f);
    kernels::use_parallel_kernels(false);
    CHECK(lp_norm(f, 1.0) == p1);
    CHECK(lp_norm(f, 2.0) == p2);
    CHECK(grad_l2_sq(f) == g2);
}

}  // TEST_SUITE("kernels")
