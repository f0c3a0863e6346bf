#include "axiswirl/vorticity.hpp"

#include <cmath>

#include "axiswirl/kernels.hpp"
#include "axiswirl/norms.hpp"

namespace axi {

VorticityPack vorticity_pack(const State& s) {
    const Grid& g = s.grid;
    VorticityPack p;
    p.w = curl_axisym(s.ur, s.uth, s.u3);
    p.gamma = make_field(g, Loc::Cell, Parity::Even);
    p.phi = make_field(g, Loc::Cell, Parity::Even);
    kernels::rows(g.nr, [&](int i) {
        const double ir = 1.0 / g.r_center(i);
        for (int j = 0; j < g.nz; ++j) {
            p.gamma.at(i, j) = p.w.wth.at(i, j) * ir;
            p.phi.at(i, j) = p.w.wr.at(i, j) * ir;
        }
    });
    p.gamma_l2 = lp_norm(p.gamma, 2.0);
    p.phi_l2 = lp_norm(p.phi, 2.0);
    return p;
}

double windowed_l2(const ScalarField& f, int collar) {
    const Grid& g = f.grid;
    const int i0 = collar, i1 = f.ni - collar;
    const int j0 = collar, j1 = f.nj - collar;
    if (i0 >= i1 || j0 >= j1) throw StateError("windowed_l2: collar swallows the field");
    double s = kernels::reduce(i1 - i0, [&](int k) {
        const int i = i0 + k;
        const double w = kTwoPi * f.sample_r(i) * g.hr * g.hz;
        return kernels::kahan_sum(j1 - j0, [&](int jj) {
            const double v = f.at(i, j0 + jj);
            return w * v * v;
        });
    });
    return std::sqrt(s);
}

IdentityResiduals identity_residuals(const State& s) {
    const Grid& g = s.grid;
    ScalarField urc = to_cell(s.ur);
    ScalarField u3c = to_cell(s.u3);
    VorticityPack p = vorticity_pack(s);

    ScalarField lur = cyl_laplacian(urc, LapMode::Swirl);
    ScalarField luth = cyl_laplacian(s.uth, LapMode::Swirl);
    ScalarField lu3 = cyl_laplacian(u3c, LapMode::Plain);
    ScalarField d3wth = ddz_cell(p.w.wth);
    ScalarField drw3 = ddr_cell(p.w.w3);
    ScalarField d3wr = ddz_cell(p.w.wr);
    ScalarField drwth = ddr_cell(p.w.wth);
    ScalarField d3w3 = ddz_cell(p.w.w3);

    ScalarField r1 = make_field(g, Loc::Cell, Parity::Even);
    ScalarField r2 = make_field(g, Loc::Cell, Parity::Even);
    ScalarField r3 = make_field(g, Loc::Cell, Parity::Even);
    ScalarField r4 = make_field(g, Loc::Cell, Parity::Even);

    ScalarField wrs = p.w.wr;
    sync_ghosts(wrs, Outer::Dirichlet0, Outer::Dirichlet0);
    // div omega in the pointwise form d_r w^r + w^r/r + d_3 w^3; the
    // conservative form cancels identically with these stencils and would
    // only measure roundoff.
    kernels::rows(g.nr, [&](int i) {
        const double rc = g.r_center(i);
        for (int j = 0; j < g.nz; ++j) {
            r1.at(i, j) = lur.at(i, j) - d3wth.at(i, j);
            r2.at(i, j) = luth.at(i, j) - (drw3.at(i, j) - d3wr.at(i, j));
            r3.at(i, j) = lu3.at(i, j) + drwth.at(i, j) + p.gamma.at(i, j);
            r4.at(i, j) = (wrs.at(i + 1, j) - wrs.at(i - 1, j)) / (2.0 * g.hr) +
                          wrs.at(i, j) / rc + d3w3.at(i, j);
        }
    });

    IdentityResiduals res;
    res.res1 = windowed_l2(r1);
    res.res2 = windowed_l2(r2);
    res.res3 = windowed_l2(r3);
    res.res_div = windowed_l2(r4);
    return res;
}

PhiGammaResidual phi_gamma_residual(const State& prev, const State& mid, const State& next) {
    const Grid& g = mid.grid;
    const double dt1 = mid.t - prev.t, dt2 = next.t - mid.t;
    if (!(dt1 > 0.0 && dt2 > 0.0) ||
        std::abs(dt1 - dt2) > 1e-10 * std::max(dt1, dt2))
        throw StateError("phi_gamma_residual: states must be uniformly spaced in time");
    const double i2dt = 1.0 / (dt1 + dt2);

    VorticityPack pp = vorticity_pack(prev);
    VorticityPack pm = vorticity_pack(mid);
    VorticityPack pn = vorticity_pack(next);

    ScalarField urc = to_cell(mid.ur);
    ScalarField u3c = to_cell(mid.u3);

    auto over_rho = [&](const ScalarField& f) {
        ScalarField out = f;
        for (int i = 0; i < g.nr; ++i)
            for (int j = 0; j < g.nz; ++j) out.at(i, j) = f.at(i, j) / mid.rho.at(i, j);
        return out;
    };

    // Phi equation terms.
    ScalarField luth = over_rho(cyl_laplacian(mid.uth, LapMode::Swirl));
    ScalarField d3_luth = ddz_cell(luth);
    ScalarField ur_over_r = make_field(g, Loc::Cell, Parity::Even);
    for (int i = 0; i < g.nr; ++i)
        for (int j = 0; j < g.nz; ++j) ur_over_r.at(i, j) = urc.at(i, j) / g.r_center(i);
    ScalarField dr_uor = ddr_cell(ur_over_r);
    ScalarField d3_uor = ddz_cell(ur_over_r);
    ScalarField dphi_r = ddr_cell(pm.phi);
    ScalarField dphi_z = ddz_cell(pm.phi);

    // Gamma equation terms.
    ScalarField drpi = ddr_cell(mid.pi, Outer::ZeroGradient, Outer::ZeroGradient);
    ScalarField dzpi = ddz_cell(mid.pi, Outer::ZeroGradient, Outer::ZeroGradient);
    ScalarField lur = cyl_laplacian(urc, LapMode::Swirl);
    ScalarField lu3 = cyl_laplacian(u3c, LapMode::Plain);
    ScalarField b1 = make_field(g, Loc::Cell, Parity::Odd);
    ScalarField b2 = make_field(g, Loc::Cell, Parity::Even);
    for (int i = 0; i < g.nr; ++i)
        for (int j = 0; j < g.nz; ++j) {
            b1.at(i, j) = (lur.at(i, j) - drpi.at(i, j)) / mid.rho.at(i, j);
            b2.at(i, j) = (lu3.at(i, j) - dzpi.at(i, j)) / mid.rho.at(i, j);
        }
    ScalarField d3b1 = ddz_cell(b1);
    ScalarField drb2 = ddr_cell(b2);
    ScalarField dgam_r = ddr_cell(pm.gamma);
    ScalarField dgam_z = ddz_cell(pm.gamma);

    ScalarField rphi = make_field(g, Loc::Cell, Parity::Even);
    ScalarField rgam = make_field(g, Loc::Cell, Parity::Even);
    kernels::rows(g.nr, [&](int i) {
        const double ir = 1.0 / g.r_center(i);
        for (int j = 0; j < g.nz; ++j) {
            const double ddt_phi = (pn.phi.at(i, j) - pp.phi.at(i, j)) * i2dt;
            const double ddt_gam = (pn.gamma.at(i, j) - pp.gamma.at(i, j)) * i2dt;
            const double adv_phi =
                urc.at(i, j) * dphi_r.at(i, j) + u3c.at(i, j) * dphi_z.at(i, j);
            const double adv_gam =
                urc.at(i, j) * dgam_r.at(i, j) + u3c.at(i, j) * dgam_z.at(i, j);
            const double stretch = pm.w.wr.at(i, j) * dr_uor.at(i, j) +
                                   pm.w.w3.at(i, j) * d3_uor.at(i, j);
            rphi.at(i, j) = ddt_phi + adv_phi + d3_luth.at(i, j) * ir - stretch;
            rgam.at(i, j) = ddt_gam + adv_gam - d3b1.at(i, j) * ir + drb2.at(i, j) * ir +
                            2.0 * mid.uth.at(i, j) * ir * pm.phi.at(i, j);
        }
    });

    PhiGammaResidual res;
    res.res_phi = windowed_l2(rphi);
    res.res_gamma = windowed_l2(rgam);
    return res;
}

}  // namespace axi
