#include "axiswirl/field.hpp"

#include <algorithm>
#include <cmath>

namespace axi {

ScalarField make_field(const Grid& g, Loc loc, Parity parity) {
    ScalarField f;
    f.grid = g;
    f.loc = loc;
    f.parity = parity;
    f.ni = (loc == Loc::RFace || loc == Loc::Node) ? g.nr + 1 : g.nr;
    f.nj = (loc == Loc::ZFace || loc == Loc::Node) ? g.nz + 1 : g.nz;
    f.v.assign(std::size_t(f.ni + 2) * (f.nj + 2), 0.0);
    return f;
}

void ScalarField::fill(double c) { std::fill(v.begin(), v.end(), c); }

namespace {

// Axis ghost column i = -1, for a range of j (ghost rows included when asked).
void fill_axis(ScalarField& f, int j0, int j1) {
    const double s = (f.parity == Parity::Odd) ? -1.0 : 1.0;
    if (f.axis_sample()) {
        // Sample i = 0 sits on the axis; ghost mirrors sample i = 1.
        for (int j = j0; j < j1; ++j) {
            if (f.parity == Parity::Odd) f.at(0, j) = 0.0;
            f.at(-1, j) = s * f.at(1, j);
        }
    } else {
        for (int j = j0; j < j1; ++j) f.at(-1, j) = s * f.at(0, j);
    }
}

void fill_outer_r(ScalarField& f, Outer bc, int j0, int j1) {
    const int n = f.ni;
    if (f.axis_sample()) {
        // Sample i = n-1 sits on r = R.
        for (int j = j0; j < j1; ++j) {
            if (bc == Outer::Dirichlet0) {
                f.at(n - 1, j) = 0.0;
                f.at(n, j) = -f.at(n - 2, j);
            } else {
                f.at(n, j) = f.at(n - 2, j);
            }
        }
    } else {
        const double s = (bc == Outer::Dirichlet0) ? -1.0 : 1.0;
        for (int j = j0; j < j1; ++j) f.at(n, j) = s * f.at(n - 1, j);
    }
}

void fill_outer_z(ScalarField& f, Outer bc, int i0, int i1) {
    const int n = f.nj;
    const bool on_wall = (f.loc == Loc::ZFace || f.loc == Loc::Node);
    if (on_wall) {
        for (int i = i0; i < i1; ++i) {
            if (bc == Outer::Dirichlet0) {
                f.at(i, 0) = 0.0;
                f.at(i, n - 1) = 0.0;
                f.at(i, -1) = -f.at(i, 1);
                f.at(i, n) = -f.at(i, n - 2);
            } else {
                f.at(i, -1) = f.at(i, 1);
                f.at(i, n) = f.at(i, n - 2);
            }
        }
    } else {
        const double s = (bc == Outer::Dirichlet0) ? -1.0 : 1.0;
        for (int i = i0; i < i1; ++i) {
            f.at(i, -1) = s * f.at(i, 0);
            f.at(i, n) = s * f.at(i, n - 1);
        }
    }
}

}  // namespace

void apply_axis_parity(ScalarField& f) { fill_axis(f, 0, f.nj); }

void fill_outer_ghosts(ScalarField& f, Outer r_bc, Outer z_bc) {
    fill_outer_z(f, z_bc, 0, f.ni);
    fill_outer_r(f, r_bc, -1, f.nj + 1);
}

void sync_ghosts(ScalarField& f, Outer r_bc, Outer z_bc) {
    // z first over interior columns, then the full r pass (ghost rows
    // included) so the four ghost corners come out consistent.
    fill_outer_z(f, z_bc, 0, f.ni);
    fill_axis(f, -1, f.nj + 1);
    fill_outer_r(f, r_bc, -1, f.nj + 1);
}

bool all_finite(const ScalarField& f) {
    for (int i = 0; i < f.ni; ++i)
        for (int j = 0; j < f.nj; ++j)
            if (!std::isfinite(f.at(i, j))) return false;
    return true;
}

double max_abs(const ScalarField& f) {
    double m = 0.0;
    for (int i = 0; i < f.ni; ++i)
        for (int j = 0; j < f.nj; ++j) m = std::max(m, std::abs(f.at(i, j)));
    return m;
}

}  // namespace axi
