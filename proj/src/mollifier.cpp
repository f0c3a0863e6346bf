#include "axiswirl/mollifier.hpp"

#include <algorithm>
#include <cmath>

#include "axiswirl/kernels.hpp"
#include "axiswirl/norms.hpp"

namespace axi {

namespace {

// C^2 ramp from 1 at t = 0 to 0 at t = 1 (complement of quintic smoothstep).
double ramp(double t) {
    if (t <= 0.0) return 1.0;
    if (t >= 1.0) return 0.0;
    return 1.0 - t * t * t * (10.0 - 15.0 * t + 6.0 * t * t);
}

// Separable bump: 1 on {r <= 1/2, |x3| <= 1/2}, supported in {r <= 2, |x3| <= 1}.
double bump(double r, double x3) {
    const double br = ramp((r - 0.5) / 1.5);
    const double bz = ramp((std::abs(x3) - 0.5) / 0.5);
    return br * bz;
}

constexpr int kNPhi = 32;

// Normalized J^eps * rho at the physical point (r0, z0); the angular
// integral is a midpoint rule over [0, pi] (cos is symmetric).  Out-of-domain
// source cells simply do not contribute; the per-point normalization makes
// this a mass-preserving (Neumann-like) extension.
double conv_at(const ScalarField& rho, double eps, double r0, double z0) {
    const Grid& g = rho.grid;
    const int i_lo = std::max(0, (int)std::floor((r0 - 2.0 * eps) / g.hr - 0.5));
    const int i_hi = std::min(g.nr - 1, (int)std::ceil((r0 + 2.0 * eps) / g.hr));
    const int j_lo = std::max(0, (int)std::floor((z0 - eps + g.Z) / g.hz - 0.5));
    const int j_hi = std::min(g.nz - 1, (int)std::ceil((z0 + eps + g.Z) / g.hz));

    double cosphi[kNPhi];
    for (int k = 0; k < kNPhi; ++k) {
        const double phi = (k + 0.5) * (0.5 * kTwoPi / kNPhi);
        cosphi[k] = std::cos(phi);
    }

    double num = 0.0, den = 0.0;
    for (int i = i_lo; i <= i_hi; ++i) {
        const double s = g.r_center(i);
        const double base = r0 * r0 + s * s;
        for (int j = j_lo; j <= j_hi; ++j) {
            const double dz = (z0 - g.z_center(j)) / eps;
            if (std::abs(dz) >= 1.0) continue;
            double wsum = 0.0;
            for (int k = 0; k < kNPhi; ++k) {
                const double d = std::sqrt(std::max(0.0, base - 2.0 * r0 * s * cosphi[k]));
                wsum += bump(d / eps, dz);
            }
            const double w = wsum * s;  // common factors cancel in num/den
            num += w * rho.at(i, j);
            den += w;
        }
    }
    return (den > 0.0) ? num / den : 1.0;
}

void check_eps(const Grid& g, double eps) {
    if (!(eps >= 2.0 * std::max(g.hr, g.hz)))
        throw ConfigError("mollify_density: eps below the resolvable scale 2 max(hr,hz)");
}

std::vector<double> axis_correction(const ScalarField& rho, double eps) {
    const Grid& g = rho.grid;
    std::vector<double> c(std::size_t(g.nz));
    kernels::rows(g.nz, [&](int j) {
        c[std::size_t(j)] = conv_at(rho, eps, 0.0, g.z_center(j)) - 1.0;
    });
    return c;
}

}  // namespace

ScalarField mollify_density(const ScalarField& rho, double eps) {
    if (rho.loc != Loc::Cell) throw StateError("mollify_density: needs a cell field");
    const Grid& g = rho.grid;
    check_eps(g, eps);
    const std::vector<double> c = axis_correction(rho, eps);
    ScalarField out = make_field(g, Loc::Cell, Parity::Even);
    kernels::rows(g.nr, [&](int i) {
        const double r0 = g.r_center(i);
        for (int j = 0; j < g.nz; ++j)
            out.at(i, j) = conv_at(rho, eps, r0, g.z_center(j)) - c[std::size_t(j)];
    });
    apply_axis_parity(out);
    return out;
}

std::vector<double> mollified_axis_trace(const ScalarField& rho, double eps) {
    const Grid& g = rho.grid;
    check_eps(g, eps);
    const std::vector<double> c = axis_correction(rho, eps);
    std::vector<double> trace(std::size_t(g.nz));
    for (int j = 0; j < g.nz; ++j)
        trace[std::size_t(j)] = conv_at(rho, eps, 0.0, g.z_center(j)) - c[std::size_t(j)];
    return trace;
}

MollifierReport mollifier_property_check(const ScalarField& rho,
                                         const ScalarField& rho_eps, double eps,
                                         double m, double M) {
    const Grid& g = rho.grid;
    MollifierReport rep;
    for (double v : mollified_axis_trace(rho, eps))
        rep.axis_deviation = std::max(rep.axis_deviation, std::abs(v - 1.0));

    rep.min_value = rho_eps.at(0, 0);
    rep.max_value = rho_eps.at(0, 0);
    for (int i = 0; i < g.nr; ++i) {
        const double ir = 1.0 / g.r_center(i);
        for (int j = 0; j < g.nz; ++j) {
            const double v = rho_eps.at(i, j);
            rep.min_value = std::min(rep.min_value, v);
            rep.max_value = std::max(rep.max_value, v);
            rep.c_linear = std::max(rep.c_linear, std::abs(v - 1.0) * ir);
        }
    }
    rep.bounds_ok = (rep.min_value >= 0.5 * m) && (rep.max_value <= 2.0 * M);
    return rep;
}

}  // namespace axi
