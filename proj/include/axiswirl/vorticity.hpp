#pragma once

#include "axiswirl/ops.hpp"
#include "axiswirl/solver.hpp"

namespace axi {

/// Vorticity triple plus the weighted pair (Phi, Gamma) = (omega^r/r,
/// omega^theta/r) that drives the regularity diagnostics.
struct VorticityPack {
    VorticityTriple w;
    ScalarField gamma;  // omega^theta / r, cell, even
    ScalarField phi;    // omega^r / r, cell, even
    double gamma_l2 = 0.0;
    double phi_l2 = 0.0;
};

VorticityPack vorticity_pack(const State& s);

/// L2 norms (over the interior window, excluding a 3-cell boundary collar)
/// of the structural identity residuals
///   (Lap - 1/r^2) u^r     - d_3 omega^theta,
///   (Lap - 1/r^2) u^theta - (d_r omega^3 - d_3 omega^r),
///   Lap u^3 + d_r omega^theta + Gamma,
///   div omega = (1/r) d_r(r omega^r) + d_3 omega^3.
/// All are O(h^2) on smooth divergence-free fields.
struct IdentityResiduals {
    double res1 = 0.0;
    double res2 = 0.0;
    double res3 = 0.0;
    double res_div = 0.0;
};
IdentityResiduals identity_residuals(const State& s);

inline constexpr int kResidualCollar = 3;

/// L2 norm over the interior window with the given boundary collar excluded.
double windowed_l2(const ScalarField& f, int collar = kResidualCollar);

/// Residual of the (Phi, Gamma) evolution system assembled from three
/// consecutive states at uniform dt (centered time difference at the middle
/// state).  Throws StateError when the spacing is non-uniform.
struct PhiGammaResidual {
    double res_phi = 0.0;
    double res_gamma = 0.0;
};
PhiGammaResidual phi_gamma_residual(const State& prev, const State& mid, const State& next);

}  // namespace axi
