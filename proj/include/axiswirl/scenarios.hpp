#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "axiswirl/solver.hpp"

namespace axi {

/// Knobs shared by the builtin initial-data families.  Each family ignores
/// the knobs that do not apply (and forces them to its defining values).
struct ScenarioParams {
    double amplitude = 0.5;         // meridional stream-function amplitude
    double swirl = 0.1;             // swirl amplitude
    double density_contrast = 0.3;  // peak |rho - 1|
    double width = 1.0;             // Gaussian localization scale
    double swirl_width = 0.0;       // swirl scale; <= 0 means same as width
};

/// Families: "no-swirl" (meridional Gaussian roll, zero swirl),
/// "small-swirl" (roll + Gaussian swirl + density bump), "homogeneous"
/// (rho = 1, roll + swirl), "vortex-ring" (rho = 1, impulse-carrying ring
/// with dipole far field + Gaussian swirl), "pure-swirl-column"
/// (u^r = u^3 = 0, rho = 1, Oseen profile swirl*(1 - exp(-r^2/4))/(2 pi r),
/// z-independent).  Unknown names raise ConfigError.
State builtin_scenario(const Grid& g, const std::string& name, const ScenarioParams& p);

std::vector<std::string> scenario_names();

/// Seeded random localized data: a few Gaussian stream-function rolls,
/// swirl bumps, and a density bump, all axis-compatible.  Used by the
/// property suites.  Amplitudes are bounded by the given caps.
State random_localized(const Grid& g, std::uint64_t seed, double max_amplitude = 0.5,
                       double max_contrast = 0.3);

}  // namespace axi
