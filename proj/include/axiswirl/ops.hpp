#pragma once

#include "axiswirl/field.hpp"

namespace axi {

enum class LapMode { Plain, Swirl };

/// Conservative discrete divergence of a staggered velocity:
///   (1/r_i)(r_{i+1/2} u^r_{i+1/2} - r_{i-1/2} u^r_{i-1/2})/hr + (u^3_{j+1/2} - u^3_{j-1/2})/hz.
/// The axis face contributes exactly zero (r = 0).
ScalarField cyl_divergence(const ScalarField& ur, const ScalarField& u3);

/// Cylindrical Laplacian of a cell field in conservative radial form
/// (1/r) d_r(r d_r f) + d_33 f, minus f/r^2 in Swirl mode.  Swirl mode
/// requires odd parity.
ScalarField cyl_laplacian(const ScalarField& f, LapMode mode,
                          Outer r_bc = Outer::Dirichlet0, Outer z_bc = Outer::Dirichlet0);

/// Face-centered gradient of a cell scalar.  Wall-normal boundary faces
/// (axis, r = R, z = +-Z) are set to zero: the projection never corrects
/// the wall-normal velocity there.
void grad_to_faces(const ScalarField& p, ScalarField& gr, ScalarField& gz);

struct VelocityTriple {
    ScalarField ur;   // r-face, odd
    ScalarField uth;  // cell, odd
    ScalarField u3;   // z-face, even
};

/// u = u^theta e_theta + curl(psi e_theta): u^r = -d_3 psi, u^3 = d_r(r psi)/r.
/// psi is node-sampled with odd parity and must vanish on the outer boundary;
/// the discrete staggered curl makes cyl_divergence vanish to machine level.
VelocityTriple from_stream_function(const ScalarField& psi, const ScalarField& uth);

struct VorticityTriple {
    ScalarField wr;   // cell, odd
    ScalarField wth;  // cell, odd
    ScalarField w3;   // cell, even
};

/// omega^r = -d_3 u^theta, omega^theta = d_3 u^r - d_r u^3,
/// omega^3 = (1/r) d_r(r u^theta), all at cell centers.
VorticityTriple curl_axisym(const ScalarField& ur, const ScalarField& uth,
                            const ScalarField& u3);

/// Averages a face field to cell centers (identity for cell fields).
ScalarField to_cell(const ScalarField& f);

/// Centered derivatives of a cell field at cell centers.
ScalarField ddr_cell(const ScalarField& f, Outer r_bc = Outer::Dirichlet0,
                     Outer z_bc = Outer::Dirichlet0);
ScalarField ddz_cell(const ScalarField& f, Outer r_bc = Outer::Dirichlet0,
                     Outer z_bc = Outer::Dirichlet0);

}  // namespace axi
