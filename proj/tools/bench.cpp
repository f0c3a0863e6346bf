// Compares the OpenMP kernel path against the serial reference path on the
// hot loops (stencil sweep, weighted reduction, one full solver step) and
// checks that the two produce bitwise identical results.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>

#include "axiswirl/analysis.hpp"
#include "axiswirl/kernels.hpp"
#include "axiswirl/norms.hpp"
#include "axiswirl/ops.hpp"
#include "axiswirl/scenarios.hpp"

using clock_type = std::chrono::steady_clock;

template <class F>
double time_ms(int reps, F&& f) {
    const auto t0 = clock_type::now();
    for (int k = 0; k < reps; ++k) f();
    const auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

int main() {
    const int n = 256;
    axi::Grid g = axi::make_grid(8.0, 8.0, n, n);
    axi::State s = axi::builtin_scenario(g, "small-swirl", {});

    std::printf("grid %dx%d, openmp %s\n", n, n,
                axi::kernels::have_openmp ? "enabled" : "unavailable");
    std::printf("%-24s %12s %12s %8s\n", "kernel", "serial[ms]", "parallel[ms]",
                "match");

    auto bench = [&](const char* name, int reps, auto&& payload) {
        axi::kernels::use_parallel_kernels(false);
        auto ref = payload();
        const double ts = time_ms(reps, [&] { payload(); });
        axi::kernels::use_parallel_kernels(true);
        auto par = payload();
        const double tp = time_ms(reps, [&] { payload(); });
        axi::kernels::use_parallel_kernels(true);
        const bool match = std::memcmp(&ref, &par, sizeof ref) == 0;
        std::printf("%-24s %12.3f %12.3f %8s\n", name, ts, tp,
                    match ? "bitwise" : "DIFFER");
    };

    bench("swirl_laplacian", 20, [&] {
        return axi::max_abs(axi::cyl_laplacian(s.uth, axi::LapMode::Swirl));
    });
    bench("l2_norm", 20, [&] { return axi::lp_norm(s.uth, 2.0); });
    bench("grad_l2_sq", 20, [&] { return axi::velocity_grad_l2_sq(s); });
    bench("advect_density", 20, [&] {
        auto r = axi::advect_density(s.rho, s.ur, s.u3, 1e-4);
        return axi::lp_norm(r, 2.0);
    });
    bench("full_step", 3, [&] {
        axi::State t = s;
        auto rep = axi::step(t, 0.0, 0.5);
        return axi::kinetic_energy(t) + rep.div_l2;
    });
    return 0;
}
