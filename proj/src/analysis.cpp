#include "axiswirl/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "axiswirl/kernels.hpp"
#include "axiswirl/norms.hpp"

namespace axi {

double velocity_l2_sq(const State& s) {
    const double a = lp_norm(s.ur, 2.0);
    const double b = lp_norm(s.uth, 2.0);
    const double c = lp_norm(s.u3, 2.0);
    return a * a + b * b + c * c;
}

double kinetic_energy(const State& s) {
    const Grid& g = s.grid;
    // State densities keep their ghosts synced (zero-gradient outer, even
    // axis), so the face averages below can read them directly.
    const ScalarField& rho = s.rho;
    const double er = kernels::reduce(g.nr + 1, [&](int i) {
        return kernels::kahan_sum(g.nz, [&](int j) {
            const double rf = 0.5 * (rho.at(i - 1, j) + rho.at(i, j));
            const double v = s.ur.at(i, j);
            return sample_weight(s.ur, i, j) * rf * v * v;
        });
    });
    const double et = kernels::reduce(g.nr, [&](int i) {
        return kernels::kahan_sum(g.nz, [&](int j) {
            const double v = s.uth.at(i, j);
            return sample_weight(s.uth, i, j) * rho.at(i, j) * v * v;
        });
    });
    const double ez = kernels::reduce(g.nr, [&](int i) {
        return kernels::kahan_sum(g.nz + 1, [&](int j) {
            const double rf = 0.5 * (rho.at(i, j - 1) + rho.at(i, j));
            const double v = s.u3.at(i, j);
            return sample_weight(s.u3, i, j) * rf * v * v;
        });
    });
    return 0.5 * (er + et + ez);
}

double angular_momentum_l1(const State& s) {
    const Grid& g = s.grid;
    return kernels::reduce(g.nr, [&](int i) {
        const double rc = g.r_center(i);
        return kernels::kahan_sum(g.nz, [&](int j) {
            return sample_weight(s.uth, i, j) * s.rho.at(i, j) *
                   std::abs(rc * s.uth.at(i, j));
        });
    });
}

namespace {

ScalarField over_r(const ScalarField& f) {
    const Grid& g = f.grid;
    ScalarField out = make_field(g, Loc::Cell, Parity::Even);
    for (int i = 0; i < g.nr; ++i) {
        const double ir = 1.0 / g.r_center(i);
        for (int j = 0; j < g.nz; ++j) out.at(i, j) = f.at(i, j) * ir;
    }
    return out;
}

}  // namespace

double velocity_grad_l2_sq(const State& s) {
    ScalarField urc = to_cell(s.ur);
    ScalarField u3c = to_cell(s.u3);
    const double ur_r = lp_norm(over_r(urc), 2.0);
    const double uth_r = lp_norm(over_r(s.uth), 2.0);
    return grad_l2_sq(urc) + ur_r * ur_r + grad_l2_sq(s.uth) + uth_r * uth_r +
           grad_l2_sq(u3c);
}

ScalarField a_over_r_field(const State& s) {
    const Grid& g = s.grid;
    ScalarField out = make_field(g, Loc::Cell, Parity::Even);
    for (int i = 0; i < g.nr; ++i) {
        const double ir = 1.0 / g.r_center(i);
        for (int j = 0; j < g.nz; ++j)
            out.at(i, j) = (1.0 / s.rho.at(i, j) - 1.0) * ir;
    }
    return out;
}

SmallnessReport smallness_report(const State& s, double c) {
    if (!(c > 0.0)) throw ConfigError("smallness_report: C must be positive");
    const Grid& g = s.grid;
    // a/r is only bounded when rho -> 1 at the axis; reject data violating it.
    for (int j = 0; j < g.nz; ++j) {
        const double axis_rho = 1.5 * s.rho.at(0, j) - 0.5 * s.rho.at(1, j);
        if (std::abs(axis_rho - 1.0) > 1e-2)
            throw StateError("smallness_report: rho != 1 at the axis, a/r unbounded");
    }

    SmallnessReport rep;
    rep.c = c;
    rep.u_l2 = std::sqrt(velocity_l2_sq(s));
    rep.uth_l3 = lp_norm(s.uth, 3.0);
    rep.a_over_r_inf = lp_norm(a_over_r_field(s), kPInf);
    rep.grad_u_l2_sq = velocity_grad_l2_sq(s);

    VorticityPack p = vorticity_pack(s);
    rep.gamma_l2 = p.gamma_l2;
    rep.phi_l2 = p.phi_l2;

    ScalarField uth_sq = s.uth;
    for (double& v : uth_sq.v) v *= v;
    uth_sq.parity = Parity::Even;
    const double uth_sq_l2 = lp_norm(uth_sq, 2.0);

    rep.f1 = rep.uth_l3 + rep.a_over_r_inf * rep.u_l2 * rep.u_l2;
    rep.f2 = rep.a_over_r_inf * rep.a_over_r_inf *
             (uth_sq_l2 * uth_sq_l2 + rep.grad_u_l2_sq);
    rep.f2rhs = rep.gamma_l2 * rep.gamma_l2 + rep.phi_l2 * rep.phi_l2;
    rep.x = rep.u_l2 * rep.u_l2 * rep.u_l2 * (rep.gamma_l2 + rep.phi_l2);
    rep.eta1 = 0.5 / c * std::exp(-c * rep.x);
    rep.satisfied = (rep.f1 <= rep.eta1) && (rep.f2 <= rep.eta1 * rep.f2rhs);
    return rep;
}

namespace {

// Bilinear sample of a synced field at physical (r, z); `outside` is returned
// when the point leaves the lattice (including ghosts).
double interp(const ScalarField& f, double r, double z, double outside) {
    const Grid& g = f.grid;
    const double x = (f.loc == Loc::Cell || f.loc == Loc::ZFace) ? r / g.hr - 0.5
                                                                 : r / g.hr;
    const double y = (f.loc == Loc::Cell || f.loc == Loc::RFace)
                         ? (z + g.Z) / g.hz - 0.5
                         : (z + g.Z) / g.hz;
    if (x < -1.0 || x > double(f.ni) || y < -1.0 || y > double(f.nj)) return outside;
    int i0 = (int)std::floor(x), j0 = (int)std::floor(y);
    i0 = std::clamp(i0, -1, f.ni - 1);
    j0 = std::clamp(j0, -1, f.nj - 1);
    const double fx = x - i0, fy = y - j0;
    return (1 - fx) * (1 - fy) * f.at(i0, j0) + fx * (1 - fy) * f.at(i0 + 1, j0) +
           (1 - fx) * fy * f.at(i0, j0 + 1) + fx * fy * f.at(i0 + 1, j0 + 1);
}

// Largest magnitude on the outermost two sample rings (r = R and z = +-Z
// sides) relative to the global magnitude; used to decide whether rescaling
// would pull significant data in from outside the domain.
double boundary_fraction(const ScalarField& f, double shift) {
    double edge = 0.0, all = 0.0;
    for (int i = 0; i < f.ni; ++i)
        for (int j = 0; j < f.nj; ++j) {
            const double v = std::abs(f.at(i, j) - shift);
            all = std::max(all, v);
            if (i >= f.ni - 2 || j < 2 || j >= f.nj - 2) edge = std::max(edge, v);
        }
    return (all > 0.0) ? edge / all : 0.0;
}

ScalarField resample(const ScalarField& src, double lambda, double factor,
                     double outside) {
    ScalarField s = src;
    sync_ghosts(s, outside == 0.0 ? Outer::Dirichlet0 : Outer::ZeroGradient,
                outside == 0.0 ? Outer::Dirichlet0 : Outer::ZeroGradient);
    ScalarField out = make_field(src.grid, src.loc, src.parity);
    for (int i = 0; i < out.ni; ++i)
        for (int j = 0; j < out.nj; ++j)
            out.at(i, j) =
                factor * interp(s, lambda * out.sample_r(i), lambda * out.sample_z(j),
                                outside);
    apply_axis_parity(out);
    return out;
}

}  // namespace

State scaling_transform(const State& s, double lambda) {
    if (!(lambda > 0.0)) throw std::domain_error("scaling_transform: lambda must be > 0");
    if (lambda > 1.0) {
        const double tol = 1e-8;
        if (boundary_fraction(s.ur, 0.0) > tol || boundary_fraction(s.uth, 0.0) > tol ||
            boundary_fraction(s.u3, 0.0) > tol || boundary_fraction(s.rho, 1.0) > tol)
            throw std::domain_error(
                "scaling_transform: rescaled support exceeds the domain");
    }
    State out = make_state(s.grid);
    out.t = s.t;
    out.rho = resample(s.rho, lambda, 1.0, 1.0);
    out.ur = resample(s.ur, lambda, lambda, 0.0);
    out.uth = resample(s.uth, lambda, lambda, 0.0);
    out.u3 = resample(s.u3, lambda, lambda, 0.0);
    out.pi = resample(s.pi, lambda, lambda * lambda, 0.0);
    return out;
}

std::vector<ScaleDeviation> scale_invariance_check(const State& s,
                                                   const std::vector<double>& lambdas,
                                                   double c) {
    SmallnessReport base = smallness_report(s, c);
    auto rel = [](double a, double b) {
        return (b != 0.0) ? std::abs(a - b) / std::abs(b) : std::abs(a);
    };
    std::vector<ScaleDeviation> out;
    for (double l : lambdas) {
        State t = scaling_transform(s, l);
        SmallnessReport r = smallness_report(t, c);
        ScaleDeviation d;
        d.lambda = l;
        d.f1 = rel(r.f1, base.f1);
        d.f2_ratio = rel(r.f2 / r.f2rhs, base.f2 / base.f2rhs);
        d.x = rel(r.x, base.x);
        out.push_back(d);
    }
    return out;
}

void AOverRMonitor::update(const State& s) {
    const double a = lp_norm(a_over_r_field(s), kPInf);
    const double urr = lp_norm(over_r(to_cell(s.ur)), kPInf);
    if (!started_) {
        started_ = true;
        a0_ = a;
        integral_ = 0.0;
    } else {
        integral_ += 0.5 * (prev_urr_ + urr) * (s.t - prev_t_);
    }
    prev_t_ = s.t;
    prev_urr_ = urr;
    value_ = a;
    bound_ = a0_ * std::exp(integral_);
}

double sobolev_hardy_check(const ScalarField& f, double s, double q) {
    const double num = hardy_weighted_norm(f, s, q);
    const double l2 = lp_norm(f, 2.0);
    const double gl2 = std::sqrt(grad_l2_sq(f));
    const double e1 = (3.0 - s) / q - 0.5;
    const double e2 = 1.5 - (3.0 - s) / q;
    const double den = std::pow(l2, e1) * std::pow(gl2, e2);
    return (den > 0.0) ? num / den : 0.0;
}

DecayFit decay_fit(const std::vector<double>& t, const std::vector<double>& y,
                   double t_a, double t_b) {
    if (t.size() != y.size()) throw std::domain_error("decay_fit: length mismatch");
    if (!(t_a < t_b)) throw std::domain_error("decay_fit: degenerate window");
    std::vector<double> lx, ly;
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (t[k] < t_a || t[k] > t_b) continue;
        if (!(y[k] > 0.0)) throw std::domain_error("decay_fit: non-positive sample");
        lx.push_back(0.5 * std::log1p(t[k] * t[k]));  // log <t>
        ly.push_back(std::log(y[k]));
    }
    const int n = (int)lx.size();
    if (n < 10) throw std::domain_error("decay_fit: fewer than 10 samples in window");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int k = 0; k < n; ++k) {
        sx += lx[k];
        sy += ly[k];
        sxx += lx[k] * lx[k];
        sxy += lx[k] * ly[k];
    }
    const double det = n * sxx - sx * sx;
    if (det <= 0.0) throw std::domain_error("decay_fit: degenerate abscissae");
    const double slope = (n * sxy - sx * sy) / det;
    const double inter = (sy - slope * sx) / n;
    DecayFit fit;
    fit.alpha = -slope;
    fit.amplitude = std::exp(inter);
    fit.samples = n;
    double ss = 0.0;
    for (int k = 0; k < n; ++k) {
        const double r = ly[k] - (inter + slope * lx[k]);
        ss += r * r;
    }
    fit.rms_log_residual = std::sqrt(ss / n);
    return fit;
}

const char* DiagnosticsRecord::csv_header() {
    return "# axiswirl diagnostics schema v1\n"
           "t,energy,grad_u_l2_sq,u_l2_sq,uth_l2_sq,uth_l3,grad_uth_vec_l2_sq,"
           "r_uth_l1,r_uth_l2_sq,gamma_l2,phi_l2,a_over_r_inf,ur_over_r_inf,"
           "res1,res2,res3,res_div,dt,div_linf,rho_min,rho_max,cg_iterations\n";
}

std::string DiagnosticsRecord::csv_row() const {
    char buf[1024];
    std::snprintf(buf, sizeof buf,
                  "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                  "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                  "%.17g,%d\n",
                  t, energy, grad_u_l2_sq, u_l2_sq, uth_l2_sq, uth_l3,
                  grad_uth_vec_l2_sq, r_uth_l1, r_uth_l2_sq, gamma_l2, phi_l2,
                  a_over_r_inf, ur_over_r_inf, res1, res2, res3, res_div, dt,
                  div_linf, rho_min, rho_max, cg_iterations);
    return buf;
}

DiagnosticsRecord diagnostics_record(const State& s, const StepReport* last_step,
                                     bool with_identity_residuals) {
    const Grid& g = s.grid;
    DiagnosticsRecord r;
    r.t = s.t;
    r.energy = kinetic_energy(s);
    r.grad_u_l2_sq = velocity_grad_l2_sq(s);
    r.u_l2_sq = velocity_l2_sq(s);
    const double uth2 = lp_norm(s.uth, 2.0);
    r.uth_l2_sq = uth2 * uth2;
    r.uth_l3 = lp_norm(s.uth, 3.0);
    const double uth_r = lp_norm(over_r(s.uth), 2.0);
    r.grad_uth_vec_l2_sq = grad_l2_sq(s.uth) + uth_r * uth_r;

    ScalarField ruth = make_field(g, Loc::Cell, Parity::Even);
    for (int i = 0; i < g.nr; ++i)
        for (int j = 0; j < g.nz; ++j) ruth.at(i, j) = g.r_center(i) * s.uth.at(i, j);
    r.r_uth_l1 = lp_norm(ruth, 1.0);
    const double ruth2 = lp_norm(ruth, 2.0);
    r.r_uth_l2_sq = ruth2 * ruth2;

    VorticityPack p = vorticity_pack(s);
    r.gamma_l2 = p.gamma_l2;
    r.phi_l2 = p.phi_l2;
    r.a_over_r_inf = lp_norm(a_over_r_field(s), kPInf);
    r.ur_over_r_inf = lp_norm(over_r(to_cell(s.ur)), kPInf);

    if (with_identity_residuals) {
        IdentityResiduals ir = identity_residuals(s);
        r.res1 = ir.res1;
        r.res2 = ir.res2;
        r.res3 = ir.res3;
        r.res_div = ir.res_div;
    }
    if (last_step) {
        r.dt = last_step->dt;
        r.div_linf = last_step->div_linf;
        r.rho_min = last_step->rho_min;
        r.rho_max = last_step->rho_max;
        r.cg_iterations = last_step->projection.iterations;
    } else {
        r.rho_min = r.rho_max = s.rho.at(0, 0);
        for (int i = 0; i < g.nr; ++i)
            for (int j = 0; j < g.nz; ++j) {
                r.rho_min = std::min(r.rho_min, s.rho.at(i, j));
                r.rho_max = std::max(r.rho_max, s.rho.at(i, j));
            }
    }
    return r;
}

}  // namespace axi
