#include "axiswirl/ops.hpp"

#include <cmath>

#include "axiswirl/kernels.hpp"

namespace axi {

ScalarField cyl_divergence(const ScalarField& ur, const ScalarField& u3) {
    const Grid& g = ur.grid;
    ScalarField d = make_field(g, Loc::Cell, Parity::Even);
    kernels::rows(g.nr, [&](int i) {
        const double rc = g.r_center(i);
        const double rl = g.r_face(i), rr = g.r_face(i + 1);
        for (int j = 0; j < g.nz; ++j) {
            d.at(i, j) = (rr * ur.at(i + 1, j) - rl * ur.at(i, j)) / (rc * g.hr) +
                         (u3.at(i, j + 1) - u3.at(i, j)) / g.hz;
        }
    });
    return d;
}

ScalarField cyl_laplacian(const ScalarField& f, LapMode mode, Outer r_bc, Outer z_bc) {
    if (f.loc != Loc::Cell) throw StateError("cyl_laplacian: needs a cell field");
    if (mode == LapMode::Swirl && f.parity != Parity::Odd)
        throw StateError("cyl_laplacian: swirl mode requires an odd-parity field");
    ScalarField t = f;
    sync_ghosts(t, r_bc, z_bc);
    const Grid& g = f.grid;
    ScalarField out = make_field(g, Loc::Cell, f.parity);
    const double ihr2 = 1.0 / (g.hr * g.hr), ihz2 = 1.0 / (g.hz * g.hz);
    const bool swirl = (mode == LapMode::Swirl);
    kernels::rows(g.nr, [&](int i) {
        const double rc = g.r_center(i);
        const double rl = g.r_face(i) / rc, rr = g.r_face(i + 1) / rc;
        const double ir2 = swirl ? 1.0 / (rc * rc) : 0.0;
        for (int j = 0; j < g.nz; ++j) {
            const double c = t.at(i, j);
            out.at(i, j) = (rr * (t.at(i + 1, j) - c) - rl * (c - t.at(i - 1, j))) * ihr2 +
                           (t.at(i, j + 1) - 2.0 * c + t.at(i, j - 1)) * ihz2 - ir2 * c;
        }
    });
    return out;
}

void grad_to_faces(const ScalarField& p, ScalarField& gr, ScalarField& gz) {
    const Grid& g = p.grid;
    gr = make_field(g, Loc::RFace, Parity::Odd);
    gz = make_field(g, Loc::ZFace, Parity::Even);
    kernels::rows(g.nr - 1, [&](int k) {
        const int i = k + 1;
        for (int j = 0; j < g.nz; ++j) gr.at(i, j) = (p.at(i, j) - p.at(i - 1, j)) / g.hr;
    });
    kernels::rows(g.nr, [&](int i) {
        for (int j = 1; j < g.nz; ++j) gz.at(i, j) = (p.at(i, j) - p.at(i, j - 1)) / g.hz;
    });
}

VelocityTriple from_stream_function(const ScalarField& psi, const ScalarField& uth) {
    if (psi.loc != Loc::Node) throw StateError("from_stream_function: psi must be node-sampled");
    const Grid& g = psi.grid;
    VelocityTriple u;
    u.ur = make_field(g, Loc::RFace, Parity::Odd);
    u.uth = uth;
    u.u3 = make_field(g, Loc::ZFace, Parity::Even);
    kernels::rows(g.nr + 1, [&](int i) {
        for (int j = 0; j < g.nz; ++j)
            u.ur.at(i, j) = -(psi.at(i, j + 1) - psi.at(i, j)) / g.hz;
    });
    kernels::rows(g.nr, [&](int i) {
        const double rl = g.r_face(i), rr = g.r_face(i + 1), rc = g.r_center(i);
        for (int j = 0; j <= g.nz; ++j)
            u.u3.at(i, j) = (rr * psi.at(i + 1, j) - rl * psi.at(i, j)) / (rc * g.hr);
    });
    apply_axis_parity(u.ur);
    apply_axis_parity(u.uth);
    apply_axis_parity(u.u3);
    return u;
}

VorticityTriple curl_axisym(const ScalarField& ur, const ScalarField& uth,
                            const ScalarField& u3) {
    const Grid& g = ur.grid;
    ScalarField urs = ur, u3s = u3, uths = uth;
    sync_ghosts(urs, Outer::Dirichlet0, Outer::Dirichlet0);
    sync_ghosts(u3s, Outer::Dirichlet0, Outer::Dirichlet0);
    sync_ghosts(uths, Outer::Dirichlet0, Outer::Dirichlet0);

    VorticityTriple w;
    w.wr = make_field(g, Loc::Cell, Parity::Odd);
    w.wth = make_field(g, Loc::Cell, Parity::Odd);
    w.w3 = make_field(g, Loc::Cell, Parity::Even);

    const double i2hr = 0.5 / g.hr, i2hz = 0.5 / g.hz;
    kernels::rows(g.nr, [&](int i) {
        const double rc = g.r_center(i);
        const double rp = g.r_center(i + 1), rm = g.r_center(i - 1);
        for (int j = 0; j < g.nz; ++j) {
            w.wr.at(i, j) = -(uths.at(i, j + 1) - uths.at(i, j - 1)) * i2hz;
            // d3 u^r and d_r u^3 from face averages (second order).
            const double d3ur = (urs.at(i, j + 1) + urs.at(i + 1, j + 1) -
                                 urs.at(i, j - 1) - urs.at(i + 1, j - 1)) * 0.5 * i2hz;
            const double dru3 = (u3s.at(i + 1, j) + u3s.at(i + 1, j + 1) -
                                 u3s.at(i - 1, j) - u3s.at(i - 1, j + 1)) * 0.5 * i2hr;
            w.wth.at(i, j) = d3ur - dru3;
            // (1/r) d_r(r u^theta): r*u^theta is even across the axis.
            w.w3.at(i, j) = (rp * uths.at(i + 1, j) - rm * uths.at(i - 1, j)) * i2hr / rc;
        }
    });
    return w;
}

ScalarField to_cell(const ScalarField& f) {
    if (f.loc == Loc::Cell) return f;
    const Grid& g = f.grid;
    ScalarField out = make_field(g, Loc::Cell, f.parity);
    if (f.loc == Loc::RFace) {
        kernels::rows(g.nr, [&](int i) {
            for (int j = 0; j < g.nz; ++j)
                out.at(i, j) = 0.5 * (f.at(i, j) + f.at(i + 1, j));
        });
    } else if (f.loc == Loc::ZFace) {
        kernels::rows(g.nr, [&](int i) {
            for (int j = 0; j < g.nz; ++j)
                out.at(i, j) = 0.5 * (f.at(i, j) + f.at(i, j + 1));
        });
    } else {
        kernels::rows(g.nr, [&](int i) {
            for (int j = 0; j < g.nz; ++j)
                out.at(i, j) = 0.25 * (f.at(i, j) + f.at(i + 1, j) + f.at(i, j + 1) +
                                       f.at(i + 1, j + 1));
        });
    }
    return out;
}

ScalarField ddr_cell(const ScalarField& f, Outer r_bc, Outer z_bc) {
    if (f.loc != Loc::Cell) throw StateError("ddr_cell: needs a cell field");
    ScalarField t = f;
    sync_ghosts(t, r_bc, z_bc);
    const Grid& g = f.grid;
    ScalarField out = make_field(g, Loc::Cell,
                                 f.parity == Parity::Even ? Parity::Odd : Parity::Even);
    const double i2hr = 0.5 / g.hr;
    kernels::rows(g.nr, [&](int i) {
        for (int j = 0; j < g.nz; ++j)
            out.at(i, j) = (t.at(i + 1, j) - t.at(i - 1, j)) * i2hr;
    });
    return out;
}

ScalarField ddz_cell(const ScalarField& f, Outer r_bc, Outer z_bc) {
    if (f.loc != Loc::Cell) throw StateError("ddz_cell: needs a cell field");
    ScalarField t = f;
    sync_ghosts(t, r_bc, z_bc);
    const Grid& g = f.grid;
    ScalarField out = make_field(g, Loc::Cell, f.parity);
    const double i2hz = 0.5 / g.hz;
    kernels::rows(g.nr, [&](int i) {
        for (int j = 0; j < g.nz; ++j)
            out.at(i, j) = (t.at(i, j + 1) - t.at(i, j - 1)) * i2hz;
    });
    return out;
}

}  // namespace axi
