#pragma once

#include <vector>

#include "axiswirl/field.hpp"

namespace axi {

/// Axis-corrected mollification of a cell density:
///   rho^eps = J^eps * rho - (J^eps * (rho - 1))(0, x3),
/// where J is a fixed C^2 bump supported in {0 <= r <= 2, |x3| <= 1} with a
/// plateau on {r <= 1/2, |x3| <= 1/2}.  The 3D convolution is evaluated with
/// an angular quadrature; the kernel mass is normalized per target point so
/// rho == 1 maps to exactly 1.  The construction forces value 1 on the axis.
/// Requires eps >= 2 max(hr, hz).
ScalarField mollify_density(const ScalarField& rho, double eps);

/// The axis trace of rho^eps evaluated directly at r = 0 (one value per z
/// row); equal to 1 up to roundoff by construction.
std::vector<double> mollified_axis_trace(const ScalarField& rho, double eps);

struct MollifierReport {
    double axis_deviation = 0.0;  // max |rho^eps(0, z) - 1|
    double min_value = 0.0;
    double max_value = 0.0;
    bool bounds_ok = false;       // m/2 <= rho^eps <= 2M
    double c_linear = 0.0;        // sup |rho^eps - 1| / r
};

/// Report-only checks of the mollified density against the bounds m, M of
/// the input.  Note the upper bound checked is 2M: mollification preserves
/// values, so no bound below M can hold in general.
MollifierReport mollifier_property_check(const ScalarField& rho,
                                         const ScalarField& rho_eps, double eps,
                                         double m, double M);

}  // namespace axi
