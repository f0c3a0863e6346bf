#pragma once

#include <string>
#include <vector>

#include "axiswirl/solver.hpp"
#include "axiswirl/vorticity.hpp"

namespace axi {

/// The initial-data smallness functionals and the threshold eta1(C):
///   F1 = |u0^th|_3 + |a0/r|_inf |u0|_2^2
///   F2 = |a0/r|_inf^2 (|(u0^th)^2|_2^2 + |grad u0|_2^2)
///   F2rhs = |Gamma0|_2^2 + |Phi0|_2^2
///   X = |u0|_2^3 (|Gamma0|_2 + |Phi0|_2),  eta1 = exp(-C X) / (2C)
/// satisfied <=> F1 <= eta1 and F2 <= eta1 * F2rhs.
struct SmallnessReport {
    double f1 = 0.0;
    double f2 = 0.0;
    double f2rhs = 0.0;
    double x = 0.0;
    double eta1 = 0.0;
    double c = 1.0;
    bool satisfied = false;

    double u_l2 = 0.0;
    double uth_l3 = 0.0;
    double a_over_r_inf = 0.0;
    double grad_u_l2_sq = 0.0;
    double gamma_l2 = 0.0;
    double phi_l2 = 0.0;
};

/// |u|_2^2 summed over the three components on their native staggerings.
double velocity_l2_sq(const State& s);

/// (1/2) |sqrt(rho) u|_2^2 with rho averaged to each component's staggering.
double kinetic_energy(const State& s);

/// Total absolute angular momentum: integral of rho |r u^th| against
/// 2 pi r dr dz.  Unlike the plain L1 norm of r u^th, this is the quantity
/// the swirl transport-diffusion structure keeps non-increasing when the
/// density varies; the two coincide for rho = 1.
double angular_momentum_l1(const State& s);

/// |grad u|_2^2 of the cylindrical vector field:
/// |grad u^r|^2 + |u^r/r|^2 + |grad u^th|^2 + |u^th/r|^2 + |grad u^3|^2,
/// each piece integrated against 2 pi r dr dz (components moved to cells).
double velocity_grad_l2_sq(const State& s);

/// 1/rho - 1 divided by the cell-center radius.
ScalarField a_over_r_field(const State& s);

/// Throws StateError when rho deviates from 1 at the axis (a/r unbounded).
SmallnessReport smallness_report(const State& s, double c);

/// Parabolic rescaling at fixed time: rho_l(x) = rho(lx), u_l(x) = l u(lx),
/// Pi_l(x) = l^2 Pi(lx), resampled on the same grid by bilinear
/// interpolation.  Throws std::domain_error when the rescaled data is not
/// representable (significant support would be pulled in from outside the
/// domain).
State scaling_transform(const State& s, double lambda);

struct ScaleDeviation {
    double lambda = 1.0;
    double f1 = 0.0;       // |F1(l) - F1(1)| / F1(1)
    double f2_ratio = 0.0; // same for F2/F2rhs
    double x = 0.0;        // same for X
};
std::vector<ScaleDeviation> scale_invariance_check(const State& s,
                                                   const std::vector<double>& lambdas,
                                                   double c = 1.0);

/// Tracks |a/r|_inf against the transport bound
/// |a0/r|_inf * exp(integral of |u^r/r|_inf), accumulated by trapezoid rule.
class AOverRMonitor {
  public:
    void update(const State& s);
    double value() const { return value_; }
    double bound() const { return bound_; }
    /// True when the monitored value exceeds the bound by more than 5%
    /// (a discretization-error diagnostic, not a failure).
    bool flagged() const { return a0_ > 0.0 && value_ > 1.05 * bound_; }

  private:
    bool started_ = false;
    double a0_ = 0.0;
    double integral_ = 0.0;
    double prev_t_ = 0.0;
    double prev_urr_ = 0.0;
    double value_ = 0.0;
    double bound_ = 0.0;
};

/// Ratio |f/r^(s/q)|_q / (|f|_2^((3-s)/q - 1/2) |grad f|_2^(3/2 - (3-s)/q))
/// for a cell field; finite iff f is nonzero.
double sobolev_hardy_check(const ScalarField& f, double s, double q);

/// Least-squares fit of y ~ A <t>^(-alpha), <t> = sqrt(1 + t^2), over the
/// samples with t in [t_a, t_b].  Needs >= 10 positive samples in window.
struct DecayFit {
    double alpha = 0.0;
    double amplitude = 0.0;
    double rms_log_residual = 0.0;
    int samples = 0;
};
DecayFit decay_fit(const std::vector<double>& t, const std::vector<double>& y,
                   double t_a, double t_b);

/// One per-stride row of the diagnostics time series.
struct DiagnosticsRecord {
    double t = 0.0;
    double energy = 0.0;       // (1/2) |sqrt(rho) u|_2^2
    double grad_u_l2_sq = 0.0;
    double u_l2_sq = 0.0;
    double uth_l2_sq = 0.0;
    double uth_l3 = 0.0;
    double grad_uth_vec_l2_sq = 0.0;  // |grad u^th|_2^2 + |u^th/r|_2^2
    double r_uth_l1 = 0.0;
    double r_uth_l2_sq = 0.0;
    double gamma_l2 = 0.0;
    double phi_l2 = 0.0;
    double a_over_r_inf = 0.0;
    double ur_over_r_inf = 0.0;
    double res1 = 0.0, res2 = 0.0, res3 = 0.0, res_div = 0.0;
    double dt = 0.0;
    double div_linf = 0.0;
    double rho_min = 0.0, rho_max = 0.0;
    int cg_iterations = 0;

    static const char* csv_header();  // includes the schema version line
    std::string csv_row() const;
};

/// Gathers every record field from the state (and the last step report).
DiagnosticsRecord diagnostics_record(const State& s, const StepReport* last_step,
                                     bool with_identity_residuals);

}  // namespace axi
