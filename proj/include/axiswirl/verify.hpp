#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace axi::verify {

struct Check {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
    bool lower_bound = false;  // pass means value >= threshold
};

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;
    bool pass = false;
};

std::vector<std::string> suite_names();

/// Runs one named suite (identities, projection, scaling, hardy, mollifier,
/// swirl-contraction, energy) at two resolutions.  nr/nz override the base
/// resolution when positive.  Throws ConfigError for unknown suites.
SuiteResult run_suite(const std::string& name, int nr = 0, int nz = 0);

void print(const SuiteResult& r, std::ostream& out);

}  // namespace axi::verify
