#include "axiswirl/norms.hpp"

#include <cmath>
#include <stdexcept>

#include "axiswirl/kernels.hpp"

namespace axi {

double sample_weight(const ScalarField& f, int i, int j) {
    const Grid& g = f.grid;
    double w = kTwoPi * f.sample_r(i) * g.hr * g.hz;
    if (f.axis_sample() && (i == 0 || i == f.ni - 1)) w *= 0.5;
    if ((f.loc == Loc::ZFace || f.loc == Loc::Node) && (j == 0 || j == f.nj - 1)) w *= 0.5;
    return w;
}

double lp_norm(const ScalarField& f, double p) {
    if (p == kPInf) return max_abs(f);
    if (!(p >= 1.0)) throw std::domain_error("lp_norm: p must be >= 1 or infinity");
    double s = kernels::reduce(f.ni, [&](int i) {
        return kernels::kahan_sum(f.nj, [&](int j) {
            return std::pow(std::abs(f.at(i, j)), p) * sample_weight(f, i, j);
        });
    });
    return std::pow(s, 1.0 / p);
}

double weighted_integral(const ScalarField& f) {
    return kernels::reduce(f.ni, [&](int i) {
        return kernels::kahan_sum(f.nj,
                                  [&](int j) { return f.at(i, j) * sample_weight(f, i, j); });
    });
}

double hardy_weighted_norm(const ScalarField& f, double s, double q) {
    if (!(s >= 0.0 && s < 2.0)) throw std::domain_error("hardy_weighted_norm: s must be in [0,2)");
    if (!(q >= 2.0 && q <= 2.0 * (3.0 - s)))
        throw std::domain_error("hardy_weighted_norm: q must be in [2, 2(3-s)]");
    if (f.loc != Loc::Cell)
        throw StateError("hardy_weighted_norm: needs a cell-sampled field (r > 0 at samples)");
    ScalarField w = f;
    for (int i = 0; i < w.ni; ++i) {
        const double r = std::pow(w.grid.r_center(i), -s / q);
        for (int j = 0; j < w.nj; ++j) w.at(i, j) *= r;
    }
    return lp_norm(w, q);
}

double grad_l2_sq(const ScalarField& f, Outer r_bc, Outer z_bc) {
    if (f.loc != Loc::Cell) throw StateError("grad_l2_sq: needs a cell field");
    ScalarField t = f;
    sync_ghosts(t, r_bc, z_bc);
    const Grid& g = t.grid;
    const double wr = kTwoPi * g.hr * g.hz;
    double sr = kernels::reduce(g.nr + 1, [&](int i) {
        const double rw = g.r_face(i) * wr * ((i == 0 || i == g.nr) ? 0.5 : 1.0);
        return kernels::kahan_sum(g.nz, [&](int j) {
            const double d = (t.at(i, j) - t.at(i - 1, j)) / g.hr;
            return d * d * rw;
        });
    });
    double sz = kernels::reduce(g.nr, [&](int i) {
        const double rw = g.r_center(i) * wr;
        return kernels::kahan_sum(g.nz + 1, [&](int j) {
            const double d = (t.at(i, j) - t.at(i, j - 1)) / g.hz;
            return d * d * rw * ((j == 0 || j == g.nz) ? 0.5 : 1.0);
        });
    });
    return sr + sz;
}

}  // namespace axi
