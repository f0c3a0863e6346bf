#pragma once

#include <stdexcept>
#include <string>

namespace axi {

// Bad user-supplied configuration (grid sizes, scenario names, config files).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A field or state failed a structural precondition (non-finite values,
// density outside bounds, wrong staggering for an operator).
struct StateError : std::runtime_error {
    explicit StateError(const std::string& msg) : std::runtime_error(msg) {}
};

struct EllipticSolveReport {
    int iterations = 0;
    double residual = 0.0;   // weighted L2 norm of A f - rhs
    double tolerance = 0.0;  // absolute residual target used
    bool converged = false;
};

// Elliptic solve failed to reach its tolerance within the iteration cap.
struct SolverError : std::runtime_error {
    EllipticSolveReport report;
    SolverError(const std::string& msg, EllipticSolveReport rep)
        : std::runtime_error(msg), report(rep) {}
};

}  // namespace axi
