#pragma once

#include <cstdint>
#include <vector>

#include "axiswirl/grid.hpp"

namespace axi {

enum class Loc : std::uint8_t { Cell, RFace, ZFace, Node };
enum class Parity : std::uint8_t { Even, Odd };

// Outer (r = R, z = +-Z) ghost treatment.
enum class Outer : std::uint8_t { Dirichlet0, ZeroGradient };

/// Axisymmetric scalar sampled on one staggering of the mesh, with one ghost
/// layer on each side.  The ghost column across r = 0 is populated from the
/// declared axis parity: odd fields mirror with a sign flip, even fields
/// mirror plainly, and odd r-face/node fields carry exactly 0 on the axis.
struct ScalarField {
    Grid grid;
    Loc loc = Loc::Cell;
    Parity parity = Parity::Even;
    int ni = 0;        // interior sample count in r
    int nj = 0;        // interior sample count in z
    std::vector<double> v;  // (ni+2) x (nj+2), j fastest

    int stride() const { return nj + 2; }
    double& at(int i, int j) { return v[std::size_t(i + 1) * (nj + 2) + (j + 1)]; }
    double at(int i, int j) const { return v[std::size_t(i + 1) * (nj + 2) + (j + 1)]; }
    double* row(int i) { return v.data() + std::size_t(i + 1) * (nj + 2) + 1; }
    const double* row(int i) const { return v.data() + std::size_t(i + 1) * (nj + 2) + 1; }

    double sample_r(int i) const {
        switch (loc) {
            case Loc::Cell:
            case Loc::ZFace: return grid.r_center(i);
            default: return grid.r_face(i);
        }
    }
    double sample_z(int j) const {
        switch (loc) {
            case Loc::Cell:
            case Loc::RFace: return grid.z_center(j);
            default: return grid.z_face(j);
        }
    }
    // Axis-direction sample lies ON the axis (r = 0) for faces/nodes.
    bool axis_sample() const { return loc == Loc::RFace || loc == Loc::Node; }

    void fill(double c);
    template <class F>
    void sample(F&& f) {
        for (int i = 0; i < ni; ++i)
            for (int j = 0; j < nj; ++j) at(i, j) = f(sample_r(i), sample_z(j));
    }
};

ScalarField make_field(const Grid& g, Loc loc, Parity parity);

/// Populates the ghost column across r = 0 per the field's parity; interior
/// values are untouched.  Odd fields sampled on the axis are forced to 0 there.
void apply_axis_parity(ScalarField& f);

/// Fills outer ghosts (r = R and z = +-Z).  Dirichlet0 makes the boundary
/// trace vanish (boundary samples zeroed for face-normal staggerings, ghosts
/// negated otherwise); ZeroGradient copies the adjacent interior value.
void fill_outer_ghosts(ScalarField& f, Outer r_bc, Outer z_bc);

/// apply_axis_parity + fill_outer_ghosts in one call.
void sync_ghosts(ScalarField& f, Outer r_bc, Outer z_bc);

bool all_finite(const ScalarField& f);
double max_abs(const ScalarField& f);

}  // namespace axi
