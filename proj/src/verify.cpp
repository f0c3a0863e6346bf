#include "axiswirl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "axiswirl/analysis.hpp"
#include "axiswirl/mollifier.hpp"
#include "axiswirl/norms.hpp"
#include "axiswirl/scenarios.hpp"
#include "axiswirl/vorticity.hpp"

namespace axi::verify {

namespace {

Check upper(const std::string& name, double value, double threshold) {
    return {name, value, threshold, value <= threshold, false};
}
Check lower(const std::string& name, double value, double threshold) {
    return {name, value, threshold, value >= threshold, true};
}
Check in_range(const std::string& name, double value, double lo, double hi) {
    Check c{name + "_in_[" + std::to_string(lo) + "," + std::to_string(hi) + "]",
            value, hi, value >= lo && value <= hi, false};
    return c;
}

State stream_swirl_state(int nr, int nz, double box = 6.0) {
    Grid g = make_grid(box, box, nr, nz);
    ScalarField psi = make_field(g, Loc::Node, Parity::Odd);
    psi.sample([](double r, double z) { return r * std::exp(-r * r - z * z); });
    apply_axis_parity(psi);
    ScalarField uth = make_field(g, Loc::Cell, Parity::Odd);
    uth.sample([](double r, double z) { return 0.7 * r * std::exp(-r * r - z * z); });
    State s = make_state(g);
    VelocityTriple u = from_stream_function(psi, uth);
    s.ur = u.ur;
    s.uth = u.uth;
    s.u3 = u.u3;
    return s;
}

SuiteResult suite_identities(int nr, int nz) {
    if (nr <= 0) nr = 64;
    if (nz <= 0) nz = nr;
    SuiteResult res{"identities", {}, false};
    IdentityResiduals a = identity_residuals(stream_swirl_state(nr, nz));
    IdentityResiduals b = identity_residuals(stream_swirl_state(2 * nr, 2 * nz));
    res.checks.push_back(in_range("res1_ratio", a.res1 / b.res1, 3.0, 5.0));
    res.checks.push_back(in_range("res2_ratio", a.res2 / b.res2, 3.0, 5.0));
    res.checks.push_back(in_range("res3_ratio", a.res3 / b.res3, 3.0, 5.0));
    res.checks.push_back(in_range("res_div_ratio", a.res_div / b.res_div, 3.0, 5.0));
    return res;
}

SuiteResult suite_projection(int nr, int nz) {
    if (nr <= 0) nr = 64;
    if (nz <= 0) nz = nr;
    SuiteResult res{"projection", {}, false};
    State s = stream_swirl_state(nr, nz, 4.0);
    const Grid& g = s.grid;

    ScalarField rho = make_field(g, Loc::Cell, Parity::Even);
    rho.sample([](double r, double z) {
        return 1.0 + 0.4 * (r / std::sqrt(1.0 + r * r)) * std::exp(-r * r - z * z);
    });

    // pollute a divergence-free field with a smooth gradient
    ScalarField phi = make_field(g, Loc::Cell, Parity::Even);
    phi.sample([](double r, double z) { return std::exp(-r * r - z * z); });
    ScalarField gr, gz;
    grad_to_faces(phi, gr, gz);
    VelocityTriple ustar{s.ur, s.uth, s.u3};
    for (std::size_t k = 0; k < ustar.ur.v.size(); ++k) ustar.ur.v[k] += gr.v[k];
    for (std::size_t k = 0; k < ustar.u3.v.size(); ++k) ustar.u3.v[k] += gz.v[k];
    // no-slip walls, as the stepper enforces before projecting
    sync_ghosts(ustar.ur, Outer::Dirichlet0, Outer::Dirichlet0);
    sync_ghosts(ustar.u3, Outer::Dirichlet0, Outer::Dirichlet0);

    const double dt = 0.01;
    ProjectResult p1 = project(ustar, rho, dt);
    const double h = std::min(g.hr, g.hz);
    const double umax = std::max(max_abs(p1.u.ur), max_abs(p1.u.u3));
    const double div1 = lp_norm(cyl_divergence(p1.u.ur, p1.u.u3), kPInf);
    res.checks.push_back(
        upper("post_div_linf", div1, 1e-8 * std::max(1.0, umax / h)));

    ProjectResult p2 = project(p1.u, rho, dt);
    double delta = 0.0;
    for (std::size_t k = 0; k < p1.u.ur.v.size(); ++k)
        delta = std::max(delta, std::abs(p2.u.ur.v[k] - p1.u.ur.v[k]));
    for (std::size_t k = 0; k < p1.u.u3.v.size(); ++k)
        delta = std::max(delta, std::abs(p2.u.u3.v[k] - p1.u.u3.v[k]));
    res.checks.push_back(upper("idempotence_linf", delta, 1e-8));
    return res;
}

SuiteResult suite_scaling(int nr, int nz) {
    if (nr <= 0) nr = 256;
    if (nz <= 0) nz = nr;
    SuiteResult res{"scaling", {}, false};
    auto deviations = [&](int n) {
        Grid g = make_grid(8.0, 8.0, n, n);
        State s = builtin_scenario(g, "small-swirl", {});
        return scale_invariance_check(s, {0.5, 2.0});
    };
    auto coarse = deviations(nr);
    double worst_c = 0.0;
    for (const auto& d : coarse) {
        res.checks.push_back(upper("F1_dev_l" + std::to_string(d.lambda), d.f1, 2e-2));
        res.checks.push_back(
            upper("F2ratio_dev_l" + std::to_string(d.lambda), d.f2_ratio, 2e-2));
        res.checks.push_back(upper("X_dev_l" + std::to_string(d.lambda), d.x, 2e-2));
        worst_c = std::max({worst_c, d.f1, d.f2_ratio, d.x});
    }
    auto fine = deviations(2 * nr);
    double worst_f = 0.0;
    for (const auto& d : fine) worst_f = std::max({worst_f, d.f1, d.f2_ratio, d.x});
    res.checks.push_back(lower("refinement_shrink", worst_c / worst_f, 3.0));
    return res;
}

SuiteResult suite_hardy(int nr, int nz) {
    if (nr <= 0) nr = 128;
    if (nz <= 0) nz = nr;
    SuiteResult res{"hardy", {}, false};
    auto sobolev_ratio = [&](int n) {
        Grid g = make_grid(6.0, 6.0, n, n);
        ScalarField f = make_field(g, Loc::Cell, Parity::Even);
        f.sample([](double r, double z) { return std::exp(-r * r - z * z); });
        return sobolev_hardy_check(f, 0.0, 6.0);
    };
    const double rc = sobolev_ratio(nr), rf = sobolev_ratio(2 * nr);
    res.checks.push_back(upper("sobolev_ratio_refinement_dev",
                               std::abs(rf - rc) / rc, 1e-3));

    Grid g = make_grid(6.0, 6.0, nr, nz);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> zc(-1.5, 1.5), wd(0.5, 1.5);
    std::vector<double> ratios;
    for (int k = 0; k < 20; ++k) {
        const double z0 = zc(rng), w = wd(rng);
        ScalarField f = make_field(g, Loc::Cell, Parity::Even);
        f.sample([&](double r, double z) {
            const double dz = z - z0;
            return std::exp(-(r * r + dz * dz) / (w * w));
        });
        ratios.push_back(sobolev_hardy_check(f, 1.0, 3.0));
    }
    std::vector<double> sorted = ratios;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[sorted.size() / 2];
    const double worst = sorted.back();
    res.checks.push_back(upper("family_max_over_median", worst / median, 10.0));
    return res;
}

SuiteResult suite_mollifier(int nr, int nz) {
    if (nr <= 0) nr = 128;
    if (nz <= 0) nz = nr;
    SuiteResult res{"mollifier", {}, false};
    Grid g = make_grid(6.0, 3.0, nr, nz);
    const double h = std::max(g.hr, g.hz);

    ScalarField one = make_field(g, Loc::Cell, Parity::Even);
    one.fill(1.0);
    ScalarField one_eps = mollify_density(one, 4.0 * h);
    MollifierReport r1 = mollifier_property_check(one, one_eps, 4.0 * h, 1.0, 1.0);
    res.checks.push_back(upper("constant_c_linear", r1.c_linear, 1e-13));
    res.checks.push_back(upper("constant_axis_dev", r1.axis_deviation, 1e-12));

    ScalarField rho = make_field(g, Loc::Cell, Parity::Even);
    // gentle radial/axial scales so the smallest eps already resolves them
    rho.sample([](double r, double z) {
        return 1.0 - 0.5 * (r / std::sqrt(9.0 + r * r)) * std::exp(-z * z / 4.0);
    });
    const double m = 0.5, M = 1.0;
    std::vector<double> cs;
    for (double eps : {2.0 * h, 4.0 * h, 8.0 * h}) {
        ScalarField re = mollify_density(rho, eps);
        MollifierReport rep = mollifier_property_check(rho, re, eps, m, M);
        res.checks.push_back(upper("axis_dev_eps" + std::to_string(eps),
                                   rep.axis_deviation, 1e-12));
        res.checks.push_back(lower("min_eps" + std::to_string(eps), rep.min_value,
                                   0.5 * m));
        res.checks.push_back(upper("max_eps" + std::to_string(eps), rep.max_value,
                                   2.0 * M));
        res.checks.push_back(upper("c_linear_eps" + std::to_string(eps),
                                   rep.c_linear, 1.0));
        cs.push_back(rep.c_linear);
    }
    const double cmax = *std::max_element(cs.begin(), cs.end());
    const double cmin = *std::min_element(cs.begin(), cs.end());
    res.checks.push_back(upper("c_linear_variation", cmax / cmin, 2.0));
    return res;
}

struct ContractionCount {
    long l1 = 0, l2 = 0;
};

double r_uth_norm(const State& s, double p) {
    const Grid& g = s.grid;
    ScalarField ruth = make_field(g, Loc::Cell, Parity::Even);
    for (int i = 0; i < g.nr; ++i)
        for (int j = 0; j < g.nz; ++j) ruth.at(i, j) = g.r_center(i) * s.uth.at(i, j);
    return lp_norm(ruth, p);
}

// With a uniform density the plain L1 norm of r u^th is non-increasing; with
// variable density only the rho-weighted version (angular_momentum_l1) is, so
// that is the L1 quantity checked.  The L2 norm is checked plain throughout.
ContractionCount contraction_violations(State s, int steps) {
    ContractionCount c;
    double l1 = angular_momentum_l1(s), l2 = r_uth_norm(s, 2.0);
    for (int n = 0; n < steps; ++n) {
        step(s);
        const double n1 = angular_momentum_l1(s), n2 = r_uth_norm(s, 2.0);
        if (n1 > l1 * (1.0 + 1e-8)) ++c.l1;
        if (n2 > l2 * (1.0 + 1e-8)) ++c.l2;
        l1 = n1;
        l2 = n2;
    }
    return c;
}

SuiteResult suite_swirl_contraction(int nr, int nz) {
    if (nr <= 0) nr = 64;
    if (nz <= 0) nz = nr;
    SuiteResult res{"swirl-contraction", {}, false};
    {
        Grid g = make_grid(6.0, 6.0, nr, nz);
        ContractionCount c =
            contraction_violations(builtin_scenario(g, "small-swirl", {}), 200);
        res.checks.push_back(upper("small_swirl_l1_violations", double(c.l1), 0.0));
        res.checks.push_back(upper("small_swirl_l2_violations", double(c.l2), 0.0));
    }
    {
        Grid g = make_grid(6.0, 6.0, nr, nz);
        ContractionCount c =
            contraction_violations(builtin_scenario(g, "homogeneous", {}), 200);
        res.checks.push_back(upper("homogeneous_l1_violations", double(c.l1), 0.0));
        res.checks.push_back(upper("homogeneous_l2_violations", double(c.l2), 0.0));
    }
    {
        Grid g = make_grid(6.0, 3.0, nr, std::max(4, nz / 2));
        ScenarioParams p;
        p.swirl = 1.0;
        ContractionCount c =
            contraction_violations(builtin_scenario(g, "pure-swirl-column", p), 200);
        res.checks.push_back(upper("column_l1_violations", double(c.l1), 0.0));
        res.checks.push_back(upper("column_l2_violations", double(c.l2), 0.0));
    }
    return res;
}

SuiteResult suite_energy(int nr, int nz) {
    if (nr <= 0) nr = 64;
    if (nz <= 0) nz = nr;
    SuiteResult res{"energy", {}, false};
    Grid g = make_grid(6.0, 6.0, nr, nz);
    long monotone_violations = 0;
    double worst_budget = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        State s = random_localized(g, seed, 0.4, 0.3);
        double e = kinetic_energy(s);
        const double e0 = e;
        double dissipated = 0.0;
        for (int n = 0; n < 200; ++n) {
            StepReport rep = step(s);
            const double en = kinetic_energy(s);
            if (en > e * (1.0 + 1e-10)) ++monotone_violations;
            dissipated += rep.dt * velocity_grad_l2_sq(s);
            e = en;
        }
        if (e0 > 0.0) worst_budget = std::max(worst_budget, (e + dissipated) / e0);
    }
    res.checks.push_back(
        upper("monotonicity_violations", double(monotone_violations), 0.0));
    res.checks.push_back(upper("energy_budget_ratio", worst_budget, 1.05));
    return res;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"identities", "projection", "scaling",  "hardy",
            "mollifier",  "swirl-contraction", "energy"};
}

SuiteResult run_suite(const std::string& name, int nr, int nz) {
    SuiteResult res;
    if (name == "identities") res = suite_identities(nr, nz);
    else if (name == "projection") res = suite_projection(nr, nz);
    else if (name == "scaling") res = suite_scaling(nr, nz);
    else if (name == "hardy") res = suite_hardy(nr, nz);
    else if (name == "mollifier") res = suite_mollifier(nr, nz);
    else if (name == "swirl-contraction") res = suite_swirl_contraction(nr, nz);
    else if (name == "energy") res = suite_energy(nr, nz);
    else throw ConfigError("unknown verify suite: " + name);
    res.pass = true;
    for (const auto& c : res.checks) res.pass = res.pass && c.pass;
    return res;
}

void print(const SuiteResult& r, std::ostream& out) {
    out << "suite " << r.suite << "\n";
    for (const auto& c : r.checks)
        out << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name << " = " << c.value
            << (c.lower_bound ? "  (>= " : "  (<= ") << c.threshold << ")\n";
    out << (r.pass ? "PASS " : "FAIL ") << r.suite << "\n";
}

}  // namespace axi::verify
