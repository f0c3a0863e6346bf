#include "axiswirl/grid.hpp"

#include <string>

namespace axi {

Grid make_grid(double R, double Z, int nr, int nz) {
    if (!(R > 0.0) || !(Z > 0.0)) {
        throw ConfigError("make_grid: domain dimensions must be positive, got R=" +
                          std::to_string(R) + " Z=" + std::to_string(Z));
    }
    if (nr < 4 || nz < 4) {
        throw ConfigError("make_grid: need at least 4 cells per direction, got nr=" +
                          std::to_string(nr) + " nz=" + std::to_string(nz));
    }
    Grid g;
    g.R = R;
    g.Z = Z;
    g.nr = nr;
    g.nz = nz;
    g.hr = R / nr;
    g.hz = 2.0 * Z / nz;
    return g;
}

}  // namespace axi
