#pragma once

#include <cmath>

#include "axiswirl/errors.hpp"

namespace axi {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Staggered axisymmetric mesh on [0,R] x [-Z,Z].
///
/// Cell centers sit at r_i = (i+1/2) hr, z_j = -Z + (j+1/2) hz, so every
/// cell-center radius is strictly positive.  r-faces sit at r = i*hr with the
/// first face exactly on the axis.  The measure is dx = 2*pi*r dr dz; the
/// quadrature weight of cell (i,j) is 2*pi*r_i*hr*hz.
struct Grid {
    double R = 0.0;
    double Z = 0.0;
    int nr = 0;
    int nz = 0;
    double hr = 0.0;
    double hz = 0.0;

    double r_center(int i) const { return (i + 0.5) * hr; }
    double z_center(int j) const { return -Z + (j + 0.5) * hz; }
    double r_face(int i) const { return i * hr; }
    double z_face(int j) const { return -Z + j * hz; }
    double cell_weight(int i) const { return kTwoPi * r_center(i) * hr * hz; }
    double cell_area() const { return hr * hz; }

    bool same_mesh(const Grid& o) const {
        return R == o.R && Z == o.Z && nr == o.nr && nz == o.nz;
    }
};

Grid make_grid(double R, double Z, int nr, int nz);

}  // namespace axi
