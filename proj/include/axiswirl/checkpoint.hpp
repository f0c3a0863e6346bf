#pragma once

#include <string>

#include "axiswirl/solver.hpp"

namespace axi {

/// Binary checkpoint: header {magic "AXI1", nr, nz as int64, R, Z, t as
/// float64, all little-endian} followed by row-major (z fastest) float64
/// arrays for rho, u^r, u^theta, u^3, Pi in that order.
void write_checkpoint(const std::string& path, const State& s);
State read_checkpoint(const std::string& path);

}  // namespace axi
