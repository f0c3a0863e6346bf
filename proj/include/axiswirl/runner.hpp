#pragma once

#include <string>

#include "axiswirl/analysis.hpp"
#include "axiswirl/config.hpp"

namespace axi {

/// Name of the environment variable that, when set, prefixes relative output
/// directories.
inline constexpr const char* kOutputRootEnv = "AXISWIRL_OUTPUT_ROOT";

struct RunSummary {
    std::string directory;  // resolved output directory
    long steps = 0;
    double t_final = 0.0;
    SmallnessReport smallness;
    bool fits_valid = false;
    DecayFit fit_u_l2_sq, fit_uth_l2_sq, fit_r_uth_l2_sq;
    long energy_violations = 0;      // E grew by > 1e-10 relative in a step
    long swirl_l1_violations = 0;    // angular_momentum_l1 grew by > 1e-8 relative
    long swirl_l2_violations = 0;
    double rho_range_drift = 0.0;    // max excursion of min/max rho vs t = 0
    bool a_over_r_flagged = false;
    double max_div_linf = 0.0;
};

/// Runs the configured scenario, writing diagnostics.csv, checkpoints, and
/// summary.txt into the output directory.  Throws on configuration or
/// numerical failure (partial outputs are flushed).
RunSummary run_scenario(const ScenarioConfig& cfg);

/// Continues from an existing state (e.g. a checkpoint): same loop and
/// artifacts, initial data taken from `s` instead of the scenario generator.
RunSummary run_from_state(State s, const ScenarioConfig& cfg);

/// Output directory after applying the environment root override.
std::string resolve_output_dir(const std::string& directory);

}  // namespace axi
