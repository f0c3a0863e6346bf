#include "axiswirl/solver.hpp"

#include <algorithm>
#include <cmath>

#include "axiswirl/kernels.hpp"
#include "axiswirl/norms.hpp"

namespace axi {

State make_state(const Grid& g) {
    State s;
    s.grid = g;
    s.rho = make_field(g, Loc::Cell, Parity::Even);
    s.rho.fill(1.0);
    s.ur = make_field(g, Loc::RFace, Parity::Odd);
    s.uth = make_field(g, Loc::Cell, Parity::Odd);
    s.u3 = make_field(g, Loc::ZFace, Parity::Even);
    s.pi = make_field(g, Loc::Cell, Parity::Even);
    return s;
}

ScalarField reciprocal_density_perturbation(const State& s) {
    ScalarField a = make_field(s.grid, Loc::Cell, Parity::Even);
    for (int i = 0; i < a.ni; ++i)
        for (int j = 0; j < a.nj; ++j) a.at(i, j) = 1.0 / s.rho.at(i, j) - 1.0;
    return a;
}

double cfl_dt(const State& s, double safety) {
    if (!(safety > 0.0 && safety <= 1.0)) throw ConfigError("cfl_dt: safety must be in (0,1]");
    const Grid& g = s.grid;
    double umax = std::max({max_abs(s.ur), max_abs(s.uth), max_abs(s.u3)});
    if (!std::isfinite(umax)) throw StateError("cfl_dt: non-finite velocity");
    double rho_min = s.rho.at(0, 0);
    for (int i = 0; i < g.nr; ++i)
        for (int j = 0; j < g.nz; ++j) rho_min = std::min(rho_min, s.rho.at(i, j));
    if (!(rho_min > 0.0) || !std::isfinite(rho_min))
        throw StateError("cfl_dt: density lost positivity");
    const double h = std::min(g.hr, g.hz);
    const double visc = 0.25 * h * h * rho_min;
    const double adv = (umax > 0.0) ? h / umax : std::numeric_limits<double>::infinity();
    return safety * std::min(adv, visc);
}

namespace {

double minmod(double a, double b) {
    if (a > 0.0 && b > 0.0) return std::min(a, b);
    if (a < 0.0 && b < 0.0) return std::max(a, b);
    return 0.0;
}

void check_advective_cfl(const ScalarField& ur, const ScalarField& u3, double dt) {
    const Grid& g = ur.grid;
    if (max_abs(ur) * dt / g.hr > 1.0 || max_abs(u3) * dt / g.hz > 1.0)
        throw StateError("advection: dt exceeds the CFL limit, step rejected");
}

// div(u q) at cells, flux-form MUSCL with minmod slopes.  q must have its
// ghosts synced.  Boundary-normal faces carry zero flux (axis r = 0 and
// zero wall-normal velocity).
void muscl_flux_div(const ScalarField& q, const ScalarField& ur, const ScalarField& u3,
                    ScalarField& out) {
    const Grid& g = q.grid;
    kernels::rows(g.nr, [&](int i) {
        const double rc = g.r_center(i);
        for (int j = 0; j < g.nz; ++j) {
            // radial faces i and i+1
            double fl = 0.0, fr = 0.0;
            if (i > 0) {
                const double v = ur.at(i, j);
                double qf;
                if (v >= 0.0)
                    qf = q.at(i - 1, j) +
                         0.5 * minmod(q.at(i - 1, j) - q.at(i - 2, j),
                                      q.at(i, j) - q.at(i - 1, j));
                else
                    qf = q.at(i, j) - 0.5 * minmod(q.at(i, j) - q.at(i - 1, j),
                                                   q.at(i + 1, j) - q.at(i, j));
                fl = g.r_face(i) * v * qf;
            }
            if (i < g.nr - 1) {
                const double v = ur.at(i + 1, j);
                double qf;
                if (v >= 0.0)
                    qf = q.at(i, j) + 0.5 * minmod(q.at(i, j) - q.at(i - 1, j),
                                                   q.at(i + 1, j) - q.at(i, j));
                else
                    qf = q.at(i + 1, j) - 0.5 * minmod(q.at(i + 1, j) - q.at(i, j),
                                                       q.at(i + 2, j) - q.at(i + 1, j));
                fr = g.r_face(i + 1) * v * qf;
            }
            // z faces j and j+1
            double fd = 0.0, fu = 0.0;
            if (j > 0) {
                const double v = u3.at(i, j);
                if (v >= 0.0)
                    fd = v * (q.at(i, j - 1) + 0.5 * minmod(q.at(i, j - 1) - q.at(i, j - 2),
                                                            q.at(i, j) - q.at(i, j - 1)));
                else
                    fd = v * (q.at(i, j) - 0.5 * minmod(q.at(i, j) - q.at(i, j - 1),
                                                        q.at(i, j + 1) - q.at(i, j)));
            }
            if (j < g.nz - 1) {
                const double v = u3.at(i, j + 1);
                if (v >= 0.0)
                    fu = v * (q.at(i, j) + 0.5 * minmod(q.at(i, j) - q.at(i, j - 1),
                                                        q.at(i, j + 1) - q.at(i, j)));
                else
                    fu = v * (q.at(i, j + 1) - 0.5 * minmod(q.at(i, j + 1) - q.at(i, j),
                                                            q.at(i, j + 2) - q.at(i, j + 1)));
            }
            out.at(i, j) = (fr - fl) / (rc * g.hr) + (fu - fd) / g.hz;
        }
    });
}

}  // namespace

ScalarField advect_density(const ScalarField& rho, const ScalarField& ur,
                           const ScalarField& u3, double dt) {
    check_advective_cfl(ur, u3, dt);
    const Grid& g = rho.grid;
    ScalarField d = make_field(g, Loc::Cell, Parity::Even);

    auto stage = [&](const ScalarField& q, ScalarField& next) {
        ScalarField t = q;
        sync_ghosts(t, Outer::ZeroGradient, Outer::ZeroGradient);
        muscl_flux_div(t, ur, u3, d);
        kernels::rows(g.nr, [&](int i) {
            for (int j = 0; j < g.nz; ++j) next.at(i, j) = q.at(i, j) - dt * d.at(i, j);
        });
    };

    ScalarField q1 = make_field(g, Loc::Cell, Parity::Even);
    ScalarField q2 = make_field(g, Loc::Cell, Parity::Even);
    stage(rho, q1);
    stage(q1, q2);
    ScalarField out = make_field(g, Loc::Cell, Parity::Even);
    kernels::rows(g.nr, [&](int i) {
        for (int j = 0; j < g.nz; ++j)
            out.at(i, j) = 0.5 * (rho.at(i, j) + q2.at(i, j));
    });
    return out;
}

namespace {

struct StageFields {
    ScalarField ur;     // r-face, ghosts synced
    ScalarField theta;  // r*u^theta at cells, ghosts synced
    ScalarField u3;     // z-face, ghosts synced
};

struct StageRhs {
    ScalarField dur, dtheta, du3;
};

// theta = r*u^theta is even across the axis and no-slip at the outer walls.
void sync_stage(StageFields& f) {
    sync_ghosts(f.ur, Outer::Dirichlet0, Outer::Dirichlet0);
    sync_ghosts(f.theta, Outer::Dirichlet0, Outer::Dirichlet0);
    sync_ghosts(f.u3, Outer::Dirichlet0, Outer::Dirichlet0);
}

void momentum_rhs(const Grid& g, const ScalarField& rho, const StageFields& f,
                  StageRhs& k, ScalarField& scratch) {
    const double i2hr = 0.5 / g.hr, i2hz = 0.5 / g.hz;
    const double ihr2 = 1.0 / (g.hr * g.hr), ihz2 = 1.0 / (g.hz * g.hz);

    // u^r at interior r-faces.
    kernels::rows(g.nr - 1, [&](int kk) {
        const int i = kk + 1;
        const double rf = g.r_face(i);
        const double rcl = g.r_center(i - 1), rcr = g.r_center(i);
        for (int j = 0; j < g.nz; ++j) {
            const double ar = f.ur.at(i, j);
            const double az = 0.25 * (f.u3.at(i - 1, j) + f.u3.at(i - 1, j + 1) +
                                      f.u3.at(i, j) + f.u3.at(i, j + 1));
            const double dr = (f.ur.at(i + 1, j) - f.ur.at(i - 1, j)) * i2hr;
            const double dz = (f.ur.at(i, j + 1) - f.ur.at(i, j - 1)) * i2hz;
            const double c = f.ur.at(i, j);
            const double lap =
                (rcr * (f.ur.at(i + 1, j) - c) - rcl * (c - f.ur.at(i - 1, j))) * ihr2 / rf +
                (f.ur.at(i, j + 1) - 2.0 * c + f.ur.at(i, j - 1)) * ihz2 - c / (rf * rf);
            const double rho_f = 0.5 * (rho.at(i - 1, j) + rho.at(i, j));
            const double cent =
                0.5 * (f.theta.at(i - 1, j) * f.theta.at(i - 1, j) /
                           (rcl * rcl * rcl) +
                       f.theta.at(i, j) * f.theta.at(i, j) / (rcr * rcr * rcr));
            k.dur.at(i, j) = -(ar * dr + az * dz) + lap / rho_f + cent;
        }
    });

    // r*u^theta at cells: flux-form MUSCL advection plus the transport-
    // diffusion operator (1/r) d_r(r d_r theta - 2 theta) + d_33 theta,
    // which is the (Delta - 1/r^2) u^theta equation with the u^r u^theta/r
    // coupling absorbed.
    muscl_flux_div(f.theta, f.ur, f.u3, scratch);
    kernels::rows(g.nr, [&](int i) {
        const double rc = g.r_center(i);
        for (int j = 0; j < g.nz; ++j) {
            const double c = f.theta.at(i, j);
            // flux through r-faces; exactly zero at the axis (theta -> 0 like r^2)
            double hl = 0.0;
            if (i > 0)
                hl = g.r_face(i) * (c - f.theta.at(i - 1, j)) / g.hr -
                     (c + f.theta.at(i - 1, j));
            const double hr_ = g.r_face(i + 1) * (f.theta.at(i + 1, j) - c) / g.hr -
                               (f.theta.at(i + 1, j) + c);
            const double diff = (hr_ - hl) / (rc * g.hr) +
                                (f.theta.at(i, j + 1) - 2.0 * c + f.theta.at(i, j - 1)) * ihz2;
            k.dtheta.at(i, j) = -scratch.at(i, j) + diff / rho.at(i, j);
        }
    });

    // u^3 at interior z-faces.
    kernels::rows(g.nr, [&](int i) {
        const double rc = g.r_center(i);
        const double rfl = g.r_face(i) / rc, rfr = g.r_face(i + 1) / rc;
        for (int j = 1; j < g.nz; ++j) {
            const double ar = 0.25 * (f.ur.at(i, j - 1) + f.ur.at(i + 1, j - 1) +
                                      f.ur.at(i, j) + f.ur.at(i + 1, j));
            const double az = f.u3.at(i, j);
            const double dr = (f.u3.at(i + 1, j) - f.u3.at(i - 1, j)) * i2hr;
            const double dz = (f.u3.at(i, j + 1) - f.u3.at(i, j - 1)) * i2hz;
            const double c = f.u3.at(i, j);
            const double lap =
                (rfr * (f.u3.at(i + 1, j) - c) - rfl * (c - f.u3.at(i - 1, j))) * ihr2 +
                (f.u3.at(i, j + 1) - 2.0 * c + f.u3.at(i, j - 1)) * ihz2;
            const double rho_f = 0.5 * (rho.at(i, j - 1) + rho.at(i, j));
            k.du3.at(i, j) = -(ar * dr + az * dz) + lap / rho_f;
        }
    });
}

}  // namespace

VelocityTriple momentum_predictor(const State& s, double dt) {
    const Grid& g = s.grid;
    check_advective_cfl(s.ur, s.u3, dt);

    ScalarField rho = s.rho;
    sync_ghosts(rho, Outer::ZeroGradient, Outer::ZeroGradient);

    StageFields f0;
    f0.ur = s.ur;
    f0.u3 = s.u3;
    f0.theta = make_field(g, Loc::Cell, Parity::Even);
    for (int i = 0; i < g.nr; ++i)
        for (int j = 0; j < g.nz; ++j) f0.theta.at(i, j) = g.r_center(i) * s.uth.at(i, j);
    sync_stage(f0);

    StageRhs k1{make_field(g, Loc::RFace, Parity::Odd), make_field(g, Loc::Cell, Parity::Even),
                make_field(g, Loc::ZFace, Parity::Even)};
    StageRhs k2 = k1;
    ScalarField scratch = make_field(g, Loc::Cell, Parity::Even);

    momentum_rhs(g, rho, f0, k1, scratch);

    StageFields f1 = f0;
    kernels::rows(g.nr + 1, [&](int i) {
        for (int j = 0; j < g.nz; ++j) f1.ur.at(i, j) = f0.ur.at(i, j) + dt * k1.dur.at(i, j);
    });
    kernels::rows(g.nr, [&](int i) {
        for (int j = 0; j < g.nz; ++j)
            f1.theta.at(i, j) = f0.theta.at(i, j) + dt * k1.dtheta.at(i, j);
        for (int j = 0; j <= g.nz; ++j) f1.u3.at(i, j) = f0.u3.at(i, j) + dt * k1.du3.at(i, j);
    });
    sync_stage(f1);

    momentum_rhs(g, rho, f1, k2, scratch);

    VelocityTriple out;
    out.ur = make_field(g, Loc::RFace, Parity::Odd);
    out.uth = make_field(g, Loc::Cell, Parity::Odd);
    out.u3 = make_field(g, Loc::ZFace, Parity::Even);
    const double hdt = 0.5 * dt;
    kernels::rows(g.nr + 1, [&](int i) {
        for (int j = 0; j < g.nz; ++j)
            out.ur.at(i, j) = f0.ur.at(i, j) + hdt * (k1.dur.at(i, j) + k2.dur.at(i, j));
    });
    kernels::rows(g.nr, [&](int i) {
        const double irc = 1.0 / g.r_center(i);
        for (int j = 0; j < g.nz; ++j)
            out.uth.at(i, j) =
                (f0.theta.at(i, j) + hdt * (k1.dtheta.at(i, j) + k2.dtheta.at(i, j))) * irc;
        for (int j = 0; j <= g.nz; ++j)
            out.u3.at(i, j) = f0.u3.at(i, j) + hdt * (k1.du3.at(i, j) + k2.du3.at(i, j));
    });
    sync_ghosts(out.ur, Outer::Dirichlet0, Outer::Dirichlet0);
    sync_ghosts(out.uth, Outer::Dirichlet0, Outer::Dirichlet0);
    sync_ghosts(out.u3, Outer::Dirichlet0, Outer::Dirichlet0);

    if (!all_finite(out.ur) || !all_finite(out.uth) || !all_finite(out.u3))
        throw StateError("momentum_predictor: non-finite values, step rejected");
    return out;
}

ProjectResult project(const VelocityTriple& ustar, const ScalarField& rho, double dt,
                      const ScalarField* pi_guess, double rel_tol) {
    const Grid& g = rho.grid;
    ScalarField beta = make_field(g, Loc::Cell, Parity::Even);
    for (int i = 0; i < g.nr; ++i)
        for (int j = 0; j < g.nz; ++j) beta.at(i, j) = dt / rho.at(i, j);

    ScalarField rhs = cyl_divergence(ustar.ur, ustar.u3);
    VariablePoissonResult vr = variable_poisson_solve(beta, rhs, rel_tol,
                                                      kEllipticMaxIter, pi_guess);

    ProjectResult pr;
    pr.pi = vr.f;
    pr.report = vr.report;
    pr.u = ustar;
    auto hmean = [](double a, double b) { return 2.0 * a * b / (a + b); };
    kernels::rows(g.nr - 1, [&](int kk) {
        const int i = kk + 1;
        for (int j = 0; j < g.nz; ++j) {
            const double bf = hmean(beta.at(i - 1, j), beta.at(i, j));
            pr.u.ur.at(i, j) -= bf * (pr.pi.at(i, j) - pr.pi.at(i - 1, j)) / g.hr;
        }
    });
    kernels::rows(g.nr, [&](int i) {
        for (int j = 1; j < g.nz; ++j) {
            const double bf = hmean(beta.at(i, j - 1), beta.at(i, j));
            pr.u.u3.at(i, j) -= bf * (pr.pi.at(i, j) - pr.pi.at(i, j - 1)) / g.hz;
        }
    });
    sync_ghosts(pr.u.ur, Outer::Dirichlet0, Outer::Dirichlet0);
    sync_ghosts(pr.u.u3, Outer::Dirichlet0, Outer::Dirichlet0);
    return pr;
}

StepReport step(State& s, double dt, double safety, double elliptic_tol) {
    if (dt <= 0.0) dt = cfl_dt(s, safety);
    const Grid& g = s.grid;

    VelocityTriple ustar = momentum_predictor(s, dt);

    ScalarField guess = s.pi;
    if (!s.pi_prev.v.empty() && s.pi_prev.grid.same_mesh(g)) {
        // Linear extrapolation from the last two pressures: cuts the initial
        // residual of the elliptic solve by an order in dt.
        for (std::size_t k = 0; k < guess.v.size(); ++k)
            guess.v[k] = (2.0 * s.pi.v[k] - s.pi_prev.v[k]) * dt;
    } else {
        for (double& v : guess.v) v *= dt;
    }
    ProjectResult pr = project(ustar, s.rho, dt, &guess, elliptic_tol);

    s.ur = pr.u.ur;
    s.uth = pr.u.uth;
    s.u3 = pr.u.u3;
    s.pi_prev = s.pi;
    s.pi = pr.pi;
    for (double& v : s.pi.v) v /= dt;

    s.rho = advect_density(s.rho, s.ur, s.u3, dt);
    s.t += dt;

    StepReport rep;
    rep.dt = dt;
    ScalarField div = cyl_divergence(s.ur, s.u3);
    rep.div_linf = max_abs(div);
    rep.div_l2 = lp_norm(div, 2.0);
    rep.rho_min = s.rho.at(0, 0);
    rep.rho_max = s.rho.at(0, 0);
    for (int i = 0; i < g.nr; ++i)
        for (int j = 0; j < g.nz; ++j) {
            rep.rho_min = std::min(rep.rho_min, s.rho.at(i, j));
            rep.rho_max = std::max(rep.rho_max, s.rho.at(i, j));
        }
    const double h = std::min(g.hr, g.hz);
    const double umax = std::max({max_abs(s.ur), max_abs(s.uth), max_abs(s.u3)});
    rep.cfl_advective = dt * umax / h;
    rep.cfl_viscous = dt / (0.25 * h * h * rep.rho_min);
    rep.projection = pr.report;
    return rep;
}

}  // namespace axi
