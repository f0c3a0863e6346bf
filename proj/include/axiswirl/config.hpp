#pragma once

#include <string>

#include "axiswirl/scenarios.hpp"

namespace axi {

/// One run description, parsed from an INI-style file with sections
/// [grid], [time], [scenario], [output], [verify].
struct ScenarioConfig {
    // [grid]
    double R = 8.0;
    double Z = 8.0;
    int nr = 128;
    int nz = 128;
    // [time]
    double t_end = 1.0;
    double safety = 0.9;
    long max_steps = 1000000;
    double dt = 0.0;            // 0 = per-step CFL value
    double elliptic_tol = 1e-10;  // relative residual for the pressure solve
    // [scenario]
    std::string scenario = "small-swirl";
    ScenarioParams params;
    double smallness_c = 1.0;
    // [output]
    std::string directory = "out";
    int stride = 1;
    long checkpoint_every = 0;  // 0 = final checkpoint only
    double fit_t_a = 5.0;
    double fit_t_b = -1.0;  // -1 = t_end
    // [verify]
    bool identity_residuals = false;  // include residual columns per stride
};

/// Parses the file; unknown keys/sections and malformed lines raise
/// ConfigError with the offending line number.
ScenarioConfig parse_config(const std::string& path);
ScenarioConfig parse_config_text(const std::string& text, const std::string& origin);

}  // namespace axi
