#pragma once

#include "axiswirl/errors.hpp"
#include "axiswirl/field.hpp"

namespace axi {

struct PoissonResult {
    ScalarField f;
    EllipticSolveReport report;
};

inline constexpr double kEllipticTol = 1e-10;
inline constexpr int kEllipticMaxIter = 50000;

/// Solves plain-mode cyl_laplacian(f) = rhs with homogeneous Dirichlet outer
/// boundary; the axis is handled by the conservative stencil (zero flux
/// through r = 0).  Jacobi-preconditioned CG in the r-weighted inner product.
/// Throws SolverError on non-convergence.
PoissonResult poisson_solve(const ScalarField& rhs, Parity parity = Parity::Even,
                            double rel_tol = kEllipticTol, int max_iter = kEllipticMaxIter);

/// Solves div(beta grad Pi) = rhs with face-averaged beta (harmonic mean) and
/// homogeneous Neumann outer boundary.  rhs is projected to weighted mean
/// zero (the removed mean is reported); the returned Pi is mean-zero.
/// `guess` warm-starts the iteration.
struct VariablePoissonResult {
    ScalarField f;
    EllipticSolveReport report;
    double rhs_mean_removed = 0.0;
};
VariablePoissonResult variable_poisson_solve(const ScalarField& beta, const ScalarField& rhs,
                                             double rel_tol = kEllipticTol,
                                             int max_iter = kEllipticMaxIter,
                                             const ScalarField* guess = nullptr);

/// Biot-Savart reconstruction u^r/r = Lap^{-1} d_3 Gamma - 2 (d_r / r) Lap^{-2} d_3 Gamma
/// on the Dirichlet box.  The axis value of (d_r g)/r uses one-sided
/// quadratic extrapolation.
ScalarField biot_savart_ur_over_r(const ScalarField& gamma, double rel_tol = kEllipticTol);

}  // namespace axi
