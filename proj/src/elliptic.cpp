#include "axiswirl/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include "axiswirl/kernels.hpp"
#include "axiswirl/norms.hpp"
#include "axiswirl/ops.hpp"

namespace axi {

namespace {

using Vec = std::vector<double>;

// Interior-only storage, idx = i*nz + j.

double wdot(const Grid& g, const Vec& a, const Vec& b) {
    const int nz = g.nz;
    return kernels::reduce(g.nr, [&](int i) {
        const double w = g.r_center(i);
        const double* pa = a.data() + std::size_t(i) * nz;
        const double* pb = b.data() + std::size_t(i) * nz;
        return kernels::kahan_sum(nz, [&](int j) { return w * pa[j] * pb[j]; });
    });
}

double wmean(const Grid& g, const Vec& a) {
    const int nz = g.nz;
    double s = kernels::reduce(g.nr, [&](int i) {
        const double w = g.r_center(i);
        const double* pa = a.data() + std::size_t(i) * nz;
        return kernels::kahan_sum(nz, [&](int j) { return w * pa[j]; });
    });
    double wtot = 0.0;
    for (int i = 0; i < g.nr; ++i) wtot += g.r_center(i);
    return s / (wtot * nz);
}

// Negated operator (SPD): out = -div(beta grad x) with the given boundary
// handling.  Coefficients are precomputed per connection; missing neighbors
// encode the boundary condition (Dirichlet folds the ghost into the diagonal,
// Neumann drops the flux).
struct Operator {
    const Grid* g;
    Vec cl, cr, cu, cd;  // neighbor couplings, >= 0
    Vec diag;
    Vec idiag;  // 1/diag (0 where diag is 0), for the smoother

    // Fast path when the couplings depend on the row only (constant
    // coefficients): the apply/smooth loops then stream 3 arrays instead of 7.
    // Detected exactly from the assembled arrays, so both paths compute
    // bit-identical results.
    bool rowwise = false;
    Vec row_cl, row_cr;  // per-row radial couplings
    double cz = 0.0;     // z coupling away from the z boundaries

    void finalize() {
        idiag.resize(diag.size());
        for (std::size_t k = 0; k < diag.size(); ++k)
            idiag[k] = (diag[k] > 0.0) ? 1.0 / diag[k] : 0.0;
        detect_rowwise();
    }

    void detect_rowwise() {
        const int nr = g->nr, nz = g->nz;
        rowwise = false;
        if (nz < 3) return;
        row_cl.assign(nr, 0.0);
        row_cr.assign(nr, 0.0);
        cz = cu[0];  // j = 0 always has an upper neighbor
        for (int i = 0; i < nr; ++i) {
            const std::size_t o = std::size_t(i) * nz;
            row_cl[i] = cl[o];
            row_cr[i] = cr[o];
            for (int j = 0; j < nz; ++j) {
                if (cl[o + j] != row_cl[i] || cr[o + j] != row_cr[i]) return;
                if (j > 0 && cd[o + j] != cz) return;
                if (j < nz - 1 && cu[o + j] != cz) return;
            }
        }
        rowwise = true;
    }

    void apply(const Vec& x, Vec& out) const {
        const int nr = g->nr, nz = g->nz;
        kernels::rows(nr, [&](int i) {
            const double* xc = x.data() + std::size_t(i) * nz;
            const double* xl = (i > 0) ? x.data() + std::size_t(i - 1) * nz : nullptr;
            const double* xr = (i < nr - 1) ? x.data() + std::size_t(i + 1) * nz : nullptr;
            const std::size_t o = std::size_t(i) * nz;
            if (rowwise) {
                const double al = row_cl[i], ar = row_cr[i];
                for (int j = 0; j < nz; ++j) {
                    double v = diag[o + j] * xc[j];
                    if (xl) v -= al * xl[j];
                    if (xr) v -= ar * xr[j];
                    if (j > 0) v -= cz * xc[j - 1];
                    if (j < nz - 1) v -= cz * xc[j + 1];
                    out[o + j] = v;
                }
                return;
            }
            for (int j = 0; j < nz; ++j) {
                double v = diag[o + j] * xc[j];
                if (xl) v -= cl[o + j] * xl[j];
                if (xr) v -= cr[o + j] * xr[j];
                if (j > 0) v -= cd[o + j] * xc[j - 1];
                if (j < nz - 1) v -= cu[o + j] * xc[j + 1];
                out[o + j] = v;
            }
        });
    }
};

// Constant-coefficient plain Laplacian, Dirichlet outer boundary.
Operator make_plain_operator(const Grid& g) {
    const int nr = g.nr, nz = g.nz;
    Operator op;
    op.g = &g;
    const std::size_t n = std::size_t(nr) * nz;
    op.cl.assign(n, 0.0);
    op.cr.assign(n, 0.0);
    op.cu.assign(n, 0.0);
    op.cd.assign(n, 0.0);
    op.diag.assign(n, 0.0);
    const double ihr2 = 1.0 / (g.hr * g.hr), ihz2 = 1.0 / (g.hz * g.hz);
    for (int i = 0; i < nr; ++i) {
        const double rc = g.r_center(i);
        const double al = g.r_face(i) / rc * ihr2;   // zero at the axis
        const double ar = g.r_face(i + 1) / rc * ihr2;
        for (int j = 0; j < nz; ++j) {
            const std::size_t k = std::size_t(i) * nz + j;
            double d = al + ar + 2.0 * ihz2;
            if (i > 0) op.cl[k] = al;
            if (i < nr - 1)
                op.cr[k] = ar;
            else
                d += ar;  // Dirichlet ghost = -x
            if (j > 0) op.cd[k] = ihz2;
            if (j < nz - 1) op.cu[k] = ihz2;
            if (j == 0 || j == nz - 1) d += ihz2;
            op.diag[k] = d;
        }
    }
    op.finalize();
    return op;
}

// Variable-coefficient operator with harmonic-mean face beta, Neumann outer.
Operator make_variable_operator(const Grid& g, const ScalarField& beta) {
    const int nr = g.nr, nz = g.nz;
    Operator op;
    op.g = &g;
    const std::size_t n = std::size_t(nr) * nz;
    op.cl.assign(n, 0.0);
    op.cr.assign(n, 0.0);
    op.cu.assign(n, 0.0);
    op.cd.assign(n, 0.0);
    op.diag.assign(n, 0.0);
    const double ihr2 = 1.0 / (g.hr * g.hr), ihz2 = 1.0 / (g.hz * g.hz);
    auto hmean = [](double a, double b) { return 2.0 * a * b / (a + b); };
    for (int i = 0; i < nr; ++i) {
        const double rc = g.r_center(i);
        for (int j = 0; j < nz; ++j) {
            const std::size_t k = std::size_t(i) * nz + j;
            const double b = beta.at(i, j);
            double al = 0.0, ar = 0.0, ad = 0.0, au = 0.0;
            if (i > 0) al = g.r_face(i) / rc * ihr2 * hmean(b, beta.at(i - 1, j));
            if (i < nr - 1) ar = g.r_face(i + 1) / rc * ihr2 * hmean(b, beta.at(i + 1, j));
            if (j > 0) ad = ihz2 * hmean(b, beta.at(i, j - 1));
            if (j < nz - 1) au = ihz2 * hmean(b, beta.at(i, j + 1));
            op.cl[k] = al;
            op.cr[k] = ar;
            op.cd[k] = ad;
            op.cu[k] = au;
            op.diag[k] = al + ar + ad + au;
        }
    }
    op.finalize();
    return op;
}

void project_mean(const Grid& g, Vec& x) {
    const double m = wmean(g, x);
    for (double& v : x) v -= m;
}

// ---------------------------------------------------------------------------
// Geometric multigrid V-cycle preconditioner.
//
// Levels coarsen the cell-centered grid by 2 in each direction; the operator
// is rediscretized per level (variable coefficients restricted by r-weighted
// averaging).  Smoothing is red-black Gauss-Seidel: within one color all
// writes are independent, so the row-parallel kernels stay bit-deterministic.
// Residuals are restricted by r-weighted 2x2 means and corrections
// prolongated bilinearly (index-clamped at boundaries).  The cycle is used
// inside flexible CG, which tolerates the mild asymmetry of rediscretized
// coarse operators.
// ---------------------------------------------------------------------------

struct MGLevel {
    Grid g;
    Operator op;
    ScalarField beta;  // variable-coefficient case only
    Vec x, b, r;
};

class Multigrid {
  public:
    // beta == nullptr selects the constant-coefficient Dirichlet operator.
    Multigrid(const Grid& g, const ScalarField* beta, bool mean_zero)
        : mean_zero_(mean_zero) {
        levels_.push_back(make_level(g, beta ? *beta : ScalarField{}, beta != nullptr));
        while (true) {
            const Grid& f = levels_.back().g;
            if (f.nr % 2 != 0 || f.nz % 2 != 0 || f.nr < 8 || f.nz < 8) break;
            Grid c = make_grid(f.R, f.Z, f.nr / 2, f.nz / 2);
            if (beta) {
                ScalarField cb = make_field(c, Loc::Cell, Parity::Even);
                restrict_field(f, levels_.back().beta, c, cb);
                levels_.push_back(make_level(c, cb, true));
            } else {
                levels_.push_back(make_level(c, ScalarField{}, false));
            }
        }
        // The operators point at their level's grid; fix the pointers up
        // after the vector has stopped relocating.
        for (MGLevel& l : levels_) l.op.g = &l.g;
    }

    bool trivial() const { return levels_.size() < 2; }
    const Operator& fine_op() const { return levels_.front().op; }

    // z = (approximate inverse) r: one V-cycle from a zero initial guess.
    void apply(const Vec& r, Vec& z) {
        levels_[0].b = r;
        levels_[0].x.assign(levels_[0].x.size(), 0.0);
        vcycle(0);
        z = levels_[0].x;
        if (mean_zero_) project_mean(levels_[0].g, z);
    }

  private:
    static MGLevel make_level(const Grid& g, ScalarField beta, bool variable) {
        MGLevel l;
        l.g = g;
        l.beta = std::move(beta);
        l.op = variable ? make_variable_operator(l.g, l.beta) : make_plain_operator(l.g);
        const std::size_t n = std::size_t(g.nr) * g.nz;
        l.x.assign(n, 0.0);
        l.b.assign(n, 0.0);
        l.r.assign(n, 0.0);
        return l;
    }

    // r-weighted 2x2 mean of a cell field onto the coarse grid.
    static void restrict_field(const Grid& f, const ScalarField& fine, const Grid& c,
                               ScalarField& coarse) {
        kernels::rows(c.nr, [&](int I) {
            const double w0 = f.r_center(2 * I), w1 = f.r_center(2 * I + 1);
            const double iw = 1.0 / (2.0 * (w0 + w1));
            for (int J = 0; J < c.nz; ++J)
                coarse.at(I, J) = iw * (w0 * (fine.at(2 * I, 2 * J) + fine.at(2 * I, 2 * J + 1)) +
                                        w1 * (fine.at(2 * I + 1, 2 * J) + fine.at(2 * I + 1, 2 * J + 1)));
        });
    }

    static void restrict_vec(const Grid& f, const Vec& fine, const Grid& c, Vec& coarse) {
        const int nzf = f.nz, nzc = c.nz;
        kernels::rows(c.nr, [&](int I) {
            const double w0 = f.r_center(2 * I), w1 = f.r_center(2 * I + 1);
            const double iw = 1.0 / (2.0 * (w0 + w1));
            const double* r0 = fine.data() + std::size_t(2 * I) * nzf;
            const double* r1 = fine.data() + std::size_t(2 * I + 1) * nzf;
            double* out = coarse.data() + std::size_t(I) * nzc;
            for (int J = 0; J < nzc; ++J)
                out[J] = iw * (w0 * (r0[2 * J] + r0[2 * J + 1]) + w1 * (r1[2 * J] + r1[2 * J + 1]));
        });
    }

    // Bilinear cell-centered prolongation, added into the fine iterate.
    static void prolongate_add(const Grid& c, const Vec& coarse, const Grid& f, Vec& fine) {
        const int nzf = f.nz, nzc = c.nz, nrc = c.nr;
        kernels::rows(f.nr, [&](int i) {
            const int I = i / 2;
            int In = (i % 2 == 0) ? I - 1 : I + 1;
            In = std::min(std::max(In, 0), nrc - 1);
            const double* cI = coarse.data() + std::size_t(I) * nzc;
            const double* cN = coarse.data() + std::size_t(In) * nzc;
            double* out = fine.data() + std::size_t(i) * nzf;
            for (int j = 0; j < nzf; ++j) {
                const int J = j / 2;
                int Jn = (j % 2 == 0) ? J - 1 : J + 1;
                Jn = std::min(std::max(Jn, 0), nzc - 1);
                out[j] += 0.5625 * cI[J] + 0.1875 * (cN[J] + cI[Jn]) + 0.0625 * cN[Jn];
            }
        });
    }

    // Red-black Gauss-Seidel sweeps; reverse = black-first (post-smoothing).
    static void smooth(MGLevel& l, int sweeps, bool reverse) {
        const int nr = l.g.nr, nz = l.g.nz;
        const Operator& op = l.op;
        Vec& x = l.x;
        const Vec& b = l.b;
        for (int s = 0; s < sweeps; ++s) {
            for (int pass = 0; pass < 2; ++pass) {
                const int color = reverse ? 1 - pass : pass;
                kernels::rows(nr, [&](int i) {
                    const std::size_t o = std::size_t(i) * nz;
                    const double* xl = (i > 0) ? x.data() + o - nz : nullptr;
                    const double* xr = (i < nr - 1) ? x.data() + o + nz : nullptr;
                    if (op.rowwise) {
                        const double al = op.row_cl[i], ar = op.row_cr[i];
                        const double cz = op.cz;
                        for (int j = (i + color) & 1; j < nz; j += 2) {
                            const std::size_t k = o + j;
                            double v = b[k];
                            if (xl) v += al * xl[j];
                            if (xr) v += ar * xr[j];
                            if (j > 0) v += cz * x[k - 1];
                            if (j < nz - 1) v += cz * x[k + 1];
                            x[k] = v * op.idiag[k];
                        }
                        return;
                    }
                    for (int j = (i + color) & 1; j < nz; j += 2) {
                        const std::size_t k = o + j;
                        double v = b[k];
                        if (xl) v += op.cl[k] * xl[j];
                        if (xr) v += op.cr[k] * xr[j];
                        if (j > 0) v += op.cd[k] * x[k - 1];
                        if (j < nz - 1) v += op.cu[k] * x[k + 1];
                        x[k] = v * op.idiag[k];
                    }
                });
            }
        }
    }

    void vcycle(std::size_t l) {
        MGLevel& L = levels_[l];
        if (l + 1 == levels_.size()) {
            smooth(L, 8, false);
            smooth(L, 8, true);
            return;
        }
        smooth(L, 1, false);
        L.op.apply(L.x, L.r);
        const int nz = L.g.nz;
        kernels::rows(L.g.nr, [&](int i) {
            const std::size_t o = std::size_t(i) * nz;
            for (int j = 0; j < nz; ++j) L.r[o + j] = L.b[o + j] - L.r[o + j];
        });
        MGLevel& C = levels_[l + 1];
        restrict_vec(L.g, L.r, C.g, C.b);
        C.x.assign(C.x.size(), 0.0);
        vcycle(l + 1);
        prolongate_add(C.g, C.x, L.g, L.x);
        smooth(L, 1, true);
    }

    std::vector<MGLevel> levels_;
    bool mean_zero_;
};

EllipticSolveReport pcg(const Grid& g, const Operator& op, Vec& x, const Vec& b,
                        bool mean_zero, double rel_tol, int max_iter,
                        Multigrid* mg = nullptr) {
    const std::size_t n = b.size();
    const int nz = g.nz;
    Vec r(n), z(n), p(n), ap(n), rprev(n);
    const bool use_mg = mg && !mg->trivial();
    Vec invdiag(n);
    for (std::size_t k = 0; k < n; ++k)
        invdiag[k] = (op.diag[k] > 0.0) ? 1.0 / op.diag[k] : 1.0;

    // Physical L2 scaling for the reported residual.
    const double scale = std::sqrt(kTwoPi * g.hr * g.hz);
    const double bnorm = std::sqrt(wdot(g, b, b));
    EllipticSolveReport rep;
    rep.tolerance = rel_tol * bnorm * scale;
    if (bnorm == 0.0) {
        x.assign(n, 0.0);
        rep.converged = true;
        return rep;
    }

    op.apply(x, ap);
    kernels::rows(g.nr, [&](int i) {
        const std::size_t o = std::size_t(i) * nz;
        for (int j = 0; j < nz; ++j) r[o + j] = b[o + j] - ap[o + j];
    });
    if (mean_zero) project_mean(g, r);

    double rz = 0.0;
    const double target = rel_tol * bnorm;
    double rnorm = std::sqrt(wdot(g, r, r));
    int it = 0;
    while (rnorm > target && it < max_iter) {
        if (use_mg) {
            mg->apply(r, z);
        } else {
            kernels::rows(g.nr, [&](int i) {
                const std::size_t o = std::size_t(i) * nz;
                for (int j = 0; j < nz; ++j) z[o + j] = invdiag[o + j] * r[o + j];
            });
        }
        if (mean_zero) project_mean(g, z);
        const double rz_new = wdot(g, r, z);
        if (it == 0) {
            p = z;
        } else {
            // Flexible (Polak-Ribiere) beta: the rediscretized-coarse V-cycle
            // is not an exactly symmetric preconditioner.
            const double beta = (rz_new - wdot(g, rprev, z)) / rz;
            kernels::rows(g.nr, [&](int i) {
                const std::size_t o = std::size_t(i) * nz;
                for (int j = 0; j < nz; ++j) p[o + j] = z[o + j] + beta * p[o + j];
            });
        }
        rz = rz_new;
        rprev = r;
        op.apply(p, ap);
        const double pap = wdot(g, p, ap);
        if (!(pap > 0.0)) break;  // operator lost definiteness (nullspace drift)
        const double alpha = rz / pap;
        kernels::rows(g.nr, [&](int i) {
            const std::size_t o = std::size_t(i) * nz;
            for (int j = 0; j < nz; ++j) {
                x[o + j] += alpha * p[o + j];
                r[o + j] -= alpha * ap[o + j];
            }
        });
        rnorm = std::sqrt(wdot(g, r, r));
        ++it;
    }
    rep.iterations = it;
    rep.residual = rnorm * scale;
    rep.converged = (rnorm <= target);
    return rep;
}

Vec to_vec(const ScalarField& f) {
    Vec v(std::size_t(f.grid.nr) * f.grid.nz);
    for (int i = 0; i < f.grid.nr; ++i)
        for (int j = 0; j < f.grid.nz; ++j) v[std::size_t(i) * f.grid.nz + j] = f.at(i, j);
    return v;
}

ScalarField from_vec(const Grid& g, const Vec& v, Parity parity) {
    ScalarField f = make_field(g, Loc::Cell, parity);
    for (int i = 0; i < g.nr; ++i)
        for (int j = 0; j < g.nz; ++j) f.at(i, j) = v[std::size_t(i) * g.nz + j];
    return f;
}

}  // namespace

PoissonResult poisson_solve(const ScalarField& rhs, Parity parity, double rel_tol,
                            int max_iter) {
    if (rhs.loc != Loc::Cell) throw StateError("poisson_solve: rhs must be cell-centered");
    const Grid& g = rhs.grid;
    Vec b = to_vec(rhs);
    for (double& v : b) v = -v;  // CG solves the negated (SPD) system
    Vec x(b.size(), 0.0);
    Multigrid mg(g, nullptr, false);
    EllipticSolveReport rep = pcg(g, mg.fine_op(), x, b, false, rel_tol, max_iter, &mg);
    if (!rep.converged) throw SolverError("poisson_solve: CG did not converge", rep);
    return {from_vec(g, x, parity), rep};
}

VariablePoissonResult variable_poisson_solve(const ScalarField& beta, const ScalarField& rhs,
                                             double rel_tol, int max_iter,
                                             const ScalarField* guess) {
    if (rhs.loc != Loc::Cell || beta.loc != Loc::Cell)
        throw StateError("variable_poisson_solve: needs cell-centered fields");
    const Grid& g = rhs.grid;
    Vec b = to_vec(rhs);
    const double m = wmean(g, b);
    for (double& v : b) v = -(v - m);
    Vec x(b.size(), 0.0);
    if (guess) {
        x = to_vec(*guess);
        project_mean(g, x);
    }
    // The projection re-solves with the same beta every step on
    // constant-density runs; reuse the hierarchy when beta is unchanged.
    thread_local std::unique_ptr<Multigrid> cached_mg;
    thread_local ScalarField cached_beta;
    const bool reusable = cached_mg && cached_beta.grid.same_mesh(g) &&
                          cached_beta.v == beta.v;
    if (!reusable) {
        cached_mg = std::make_unique<Multigrid>(g, &beta, true);
        cached_beta = beta;
    }
    EllipticSolveReport rep =
        pcg(g, cached_mg->fine_op(), x, b, true, rel_tol, max_iter, cached_mg.get());
    if (!rep.converged)
        throw SolverError("variable_poisson_solve: CG did not converge", rep);
    project_mean(g, x);
    VariablePoissonResult res{from_vec(g, x, Parity::Even), rep, m};
    return res;
}

namespace {

// Plain-Laplacian solve with a prescribed Dirichlet trace on the outer
// boundary (axis handled by the zero-flux stencil as usual).  The trace is
// folded into the right-hand side: a wall ghost 2b - x adds 2*coupling*b
// relative to the homogeneous convention the operator encodes.
template <class Trace>
PoissonResult poisson_solve_with_trace(const ScalarField& rhs, Trace&& trace,
                                       double rel_tol, int max_iter) {
    const Grid& g = rhs.grid;
    Vec b = to_vec(rhs);
    const int nr = g.nr, nz = g.nz;
    const double ihr2 = 1.0 / (g.hr * g.hr), ihz2 = 1.0 / (g.hz * g.hz);
    const double ar = g.r_face(nr) / g.r_center(nr - 1) * ihr2;
    for (int j = 0; j < nz; ++j)
        b[std::size_t(nr - 1) * nz + j] -= 2.0 * ar * trace(g.R, g.z_center(j));
    for (int i = 0; i < nr; ++i) {
        const double rc = g.r_center(i);
        b[std::size_t(i) * nz] -= 2.0 * ihz2 * trace(rc, -g.Z);
        b[std::size_t(i) * nz + nz - 1] -= 2.0 * ihz2 * trace(rc, g.Z);
    }
    for (double& v : b) v = -v;
    Vec x(b.size(), 0.0);
    Multigrid mg(g, nullptr, false);
    EllipticSolveReport rep = pcg(g, mg.fine_op(), x, b, false, rel_tol, max_iter, &mg);
    if (!rep.converged)
        throw SolverError("poisson_solve_with_trace: CG did not converge", rep);
    return {from_vec(g, x, Parity::Even), rep};
}

}  // namespace

ScalarField biot_savart_ur_over_r(const ScalarField& gamma, double rel_tol) {
    const Grid& g = gamma.grid;
    ScalarField dz = ddz_cell(gamma);

    // The inverse Laplacians act on all of space; on the truncated box their
    // far fields supply the Dirichlet data.  With S = d_3 Gamma (zero total
    // mass, vertical dipole moment p3 = -int Gamma dx):
    //   Lap^-1 S  ->  -p3 z / (4 pi |x|^3),
    //   Lap^-2 S  ->  +p3 z / (8 pi |x|)   (non-decaying: the biharmonic
    // kernel -|x|/(8 pi) leaves an angular function at infinity, so a zero
    // trace here would inject an O(1) error that refinement cannot remove).
    const double p3 = -weighted_integral(gamma);
    auto trace1 = [p3](double r, double z) {
        const double n = std::sqrt(r * r + z * z);
        return -p3 * z / (4.0 * std::acos(-1.0) * n * n * n);
    };
    auto trace2 = [p3](double r, double z) {
        return p3 * z / (8.0 * std::acos(-1.0) * std::sqrt(r * r + z * z));
    };
    PoissonResult g1 = poisson_solve_with_trace(dz, trace1, rel_tol, kEllipticMaxIter);
    PoissonResult g2 = poisson_solve_with_trace(g1.f, trace2, rel_tol, kEllipticMaxIter);

    ScalarField t = g2.f;
    apply_axis_parity(t);
    for (int j = 0; j < g.nz; ++j)
        t.at(g.nr, j) = 2.0 * trace2(g.R, g.z_center(j)) - t.at(g.nr - 1, j);
    for (int i = 0; i < g.nr; ++i) {
        t.at(i, -1) = 2.0 * trace2(g.r_center(i), -g.Z) - t.at(i, 0);
        t.at(i, g.nz) = 2.0 * trace2(g.r_center(i), g.Z) - t.at(i, g.nz - 1);
    }
    ScalarField out = make_field(g, Loc::Cell, Parity::Even);
    kernels::rows(g.nr, [&](int i) {
        if (i == 0) return;  // axis column extrapolated below
        const double rc = g.r_center(i);
        for (int j = 0; j < g.nz; ++j) {
            const double dr = (t.at(i + 1, j) - t.at(i - 1, j)) / (2.0 * g.hr);
            out.at(i, j) = g1.f.at(i, j) - 2.0 * dr / rc;
        }
    });
    // (d_r g2)/r is finite on the axis (g2 even); extrapolate the first cell
    // column quadratically instead of dividing by the smallest radius.
    for (int j = 0; j < g.nz; ++j) {
        auto q = [&](int i) {
            const double dr = (t.at(i + 1, j) - t.at(i - 1, j)) / (2.0 * g.hr);
            return dr / g.r_center(i);
        };
        const double q0 = 3.0 * q(1) - 3.0 * q(2) + q(3);
        out.at(0, j) = g1.f.at(0, j) - 2.0 * q0;
    }
    return out;
}

}  // namespace axi
