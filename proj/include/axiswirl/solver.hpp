#pragma once

#include "axiswirl/elliptic.hpp"
#include "axiswirl/field.hpp"
#include "axiswirl/ops.hpp"

namespace axi {

/// Outer-wall model for the velocity.  NoSlip zeroes every component at the
/// walls; it damps everything near the boundary but generates wall vorticity
/// sheets that destroy the hydrodynamic impulse of the interior flow.
/// FreeSlip keeps the wall-normal component zero and mirrors the tangential
/// components (zero tangential stress, zero angular-momentum flux), which is
/// the right box surrogate for whole-space decay studies.
enum class Wall { NoSlip, FreeSlip };

/// Full solver unknown at one time level.  `pi` holds the physical pressure
/// estimate from the last projection (the projected potential divided by dt);
/// it is zero before the first step.  a = 1/rho - 1 is derived on demand.
struct State {
    Grid grid;
    double t = 0.0;
    Wall wall = Wall::NoSlip;
    ScalarField rho;  // cell, even
    ScalarField ur;   // r-face, odd (exactly 0 on the axis face)
    ScalarField uth;  // cell, odd
    ScalarField u3;   // z-face, even
    ScalarField pi;   // cell, even

    // Pressure estimate one step earlier, kept only to extrapolate the
    // elliptic-solve initial guess.  Empty before the second step and after
    // checkpoint restore; never serialized (a cold guess costs one slightly
    // slower solve, not accuracy).
    ScalarField pi_prev;
};

State make_state(const Grid& g);

/// 1/rho - 1 at cell centers.
ScalarField reciprocal_density_perturbation(const State& s);

struct StepReport {
    double dt = 0.0;
    double div_linf = 0.0;
    double div_l2 = 0.0;
    double rho_min = 0.0;
    double rho_max = 0.0;
    double cfl_advective = 0.0;  // dt * |u|_max / min(h)
    double cfl_viscous = 0.0;    // dt / (rho_min * min(h)^2 / 4)
    EllipticSolveReport projection;
};

/// dt = safety * min(advective limit h/|u|_max, viscous limit rho_min*min(h)^2/4).
double cfl_dt(const State& s, double safety);

/// Flux-form MUSCL (minmod-limited) transport of a cell scalar by a staggered
/// divergence-free velocity, Heun in time.  Conserves total weighted mass to
/// roundoff and preserves min/max up to the divergence residual of u.
/// Throws StateError when dt exceeds the advective CFL limit.
ScalarField advect_density(const ScalarField& rho, const ScalarField& ur,
                           const ScalarField& u3, double dt);

/// Explicit Heun update of the three momentum components: convective
/// advection, variable-density viscous terms (swirl-mode Laplacian on u^r,
/// plain on u^3), centrifugal source (u^theta)^2/r, and the swirl coupling
/// handled through the transport-diffusion form of r*u^theta.
VelocityTriple momentum_predictor(const State& s, double dt);

struct ProjectResult {
    VelocityTriple u;
    ScalarField pi;  // potential of the solve: div((dt/rho) grad pi) = div u*
    EllipticSolveReport report;
};

/// Pressure projection: solves div((dt/rho) grad Pi) = div(u*) with
/// harmonic-mean face coefficients and subtracts (dt/rho) grad Pi.
ProjectResult project(const VelocityTriple& ustar, const ScalarField& rho, double dt,
                      const ScalarField* pi_guess = nullptr,
                      double rel_tol = kEllipticTol, Wall wall = Wall::NoSlip);

/// One full step: momentum predictor -> projection -> density transport.
/// dt <= 0 requests the CFL value with the given safety factor.
StepReport step(State& s, double dt = 0.0, double safety = 0.9,
                double elliptic_tol = kEllipticTol);

}  // namespace axi
