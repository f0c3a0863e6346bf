#pragma once

#include <limits>

#include "axiswirl/field.hpp"

namespace axi {

inline constexpr double kPInf = std::numeric_limits<double>::infinity();

/// Quadrature weight of sample (i,j): 2*pi*r*hr*hz at the sample radius, with
/// half weights for boundary samples of staggered directions.  The axis face
/// carries weight zero (r = 0).
double sample_weight(const ScalarField& f, int i, int j);

/// L^p norm with measure 2*pi*r dr dz; midpoint quadrature for finite p,
/// max over samples for p = infinity.  Throws std::domain_error for p < 1.
double lp_norm(const ScalarField& f, double p);

/// Integral of f against the axisymmetric measure (no absolute value).
double weighted_integral(const ScalarField& f);

/// || f / r^(s/q) ||_q using cell-center radii; requires a cell-sampled field,
/// s in [0,2) and q in [2, 2(3-s)].
double hardy_weighted_norm(const ScalarField& f, double s, double q);

/// || grad f ||_2^2 for an axisymmetric scalar: |d_r f|^2 + |d_3 f|^2
/// integrated with the 2*pi*r measure, using face-centered differences.
/// Requires a cell field with ghosts synced by the caller's parity choice.
double grad_l2_sq(const ScalarField& f, Outer r_bc = Outer::Dirichlet0,
                  Outer z_bc = Outer::Dirichlet0);

}  // namespace axi
