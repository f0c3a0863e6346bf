#include "axiswirl/runner.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "axiswirl/checkpoint.hpp"
#include "axiswirl/kernels.hpp"
#include "axiswirl/norms.hpp"

namespace axi {

namespace {

double r_uth_l2(const State& s) {
    const Grid& g = s.grid;
    const double sq = kernels::reduce(g.nr, [&](int i) {
        const double rc = g.r_center(i);
        return kernels::kahan_sum(g.nz, [&](int j) {
            const double v = rc * s.uth.at(i, j);
            return sample_weight(s.uth, i, j) * v * v;
        });
    });
    return std::sqrt(sq);
}

void write_summary(const std::string& path, const RunSummary& s,
                   const ScenarioConfig& cfg) {
    std::ofstream out(path);
    auto kv = [&](const std::string& k, double v) { out << k << " = " << v << "\n"; };
    out.precision(17);
    out << "scenario = " << cfg.scenario << "\n";
    kv("steps", double(s.steps));
    kv("t_final", s.t_final);
    kv("max_div_linf", s.max_div_linf);
    kv("F1", s.smallness.f1);
    kv("F2", s.smallness.f2);
    kv("F2rhs", s.smallness.f2rhs);
    kv("X", s.smallness.x);
    kv("eta1", s.smallness.eta1);
    kv("C", s.smallness.c);
    out << "smallness_satisfied = " << (s.smallness.satisfied ? "true" : "false") << "\n";
    if (s.fits_valid) {
        kv("alpha_u_l2_sq", s.fit_u_l2_sq.alpha);
        kv("alpha_uth_l2_sq", s.fit_uth_l2_sq.alpha);
        kv("alpha_r_uth_l2_sq", s.fit_r_uth_l2_sq.alpha);
        kv("fit_rms_u_l2_sq", s.fit_u_l2_sq.rms_log_residual);
        kv("fit_rms_uth_l2_sq", s.fit_uth_l2_sq.rms_log_residual);
        kv("fit_rms_r_uth_l2_sq", s.fit_r_uth_l2_sq.rms_log_residual);
    }
    kv("energy_violations", double(s.energy_violations));
    kv("swirl_l1_violations", double(s.swirl_l1_violations));
    kv("swirl_l2_violations", double(s.swirl_l2_violations));
    kv("rho_range_drift", s.rho_range_drift);
    out << "a_over_r_flagged = " << (s.a_over_r_flagged ? "true" : "false") << "\n";
}

}  // namespace

std::string resolve_output_dir(const std::string& directory) {
    const char* root = std::getenv(kOutputRootEnv);
    std::filesystem::path p(directory);
    if (root && *root && p.is_relative()) p = std::filesystem::path(root) / p;
    return p.string();
}

RunSummary run_scenario(const ScenarioConfig& cfg) {
    Grid g = make_grid(cfg.R, cfg.Z, cfg.nr, cfg.nz);
    return run_from_state(builtin_scenario(g, cfg.scenario, cfg.params), cfg);
}

RunSummary run_from_state(State s, const ScenarioConfig& cfg) {
    RunSummary sum;
    sum.directory = resolve_output_dir(cfg.directory);
    std::filesystem::create_directories(sum.directory);
    const std::filesystem::path dir(sum.directory);

    std::ofstream csv(dir / "diagnostics.csv");
    if (!csv) throw ConfigError("cannot write to output directory " + sum.directory);
    csv << DiagnosticsRecord::csv_header();

    sum.smallness = smallness_report(s, cfg.smallness_c);

    const bool swirl_active = lp_norm(s.uth, kPInf) > 0.0;
    const bool inhomogeneous = sum.smallness.a_over_r_inf > 0.0;
    AOverRMonitor monitor;
    monitor.update(s);

    DiagnosticsRecord rec = diagnostics_record(s, nullptr, cfg.identity_residuals);
    csv << rec.csv_row();
    std::vector<double> ts, u2, uth2, ruth2;
    auto push_series = [&](const DiagnosticsRecord& r) {
        ts.push_back(r.t);
        u2.push_back(r.u_l2_sq);
        uth2.push_back(r.uth_l2_sq);
        ruth2.push_back(r.r_uth_l2_sq);
    };
    push_series(rec);

    double energy = rec.energy;
    double swirl_l1 = angular_momentum_l1(s);
    double swirl_l2 = std::sqrt(rec.r_uth_l2_sq);
    const double rho_min0 = rec.rho_min, rho_max0 = rec.rho_max;

    long n = 0;
    try {
        while (s.t < cfg.t_end && n < cfg.max_steps) {
            double dt = (cfg.dt > 0.0) ? cfg.dt : cfl_dt(s, cfg.safety);
            if (s.t + dt > cfg.t_end) dt = cfg.t_end - s.t;
            StepReport rep = step(s, dt, cfg.safety, cfg.elliptic_tol);
            ++n;

            sum.max_div_linf = std::max(sum.max_div_linf, rep.div_linf);
            const double e = kinetic_energy(s);
            if (e > energy * (1.0 + 1e-10)) ++sum.energy_violations;
            energy = e;
            if (swirl_active) {
                const double l1 = angular_momentum_l1(s);
                const double l2 = r_uth_l2(s);
                if (l1 > swirl_l1 * (1.0 + 1e-8)) ++sum.swirl_l1_violations;
                if (l2 > swirl_l2 * (1.0 + 1e-8)) ++sum.swirl_l2_violations;
                swirl_l1 = l1;
                swirl_l2 = l2;
            }
            sum.rho_range_drift = std::max(
                sum.rho_range_drift,
                std::max(rho_min0 - rep.rho_min, rep.rho_max - rho_max0));
            if (inhomogeneous) {
                monitor.update(s);
                sum.a_over_r_flagged = sum.a_over_r_flagged || monitor.flagged();
            }

            if (n % cfg.stride == 0 || s.t >= cfg.t_end) {
                rec = diagnostics_record(s, &rep, cfg.identity_residuals);
                csv << rec.csv_row();
                push_series(rec);
            }
            if (cfg.checkpoint_every > 0 && n % cfg.checkpoint_every == 0)
                write_checkpoint((dir / ("checkpoint_" + std::to_string(n) + ".ckpt"))
                                     .string(),
                                 s);
        }
    } catch (...) {
        csv.flush();
        write_checkpoint((dir / "abort.ckpt").string(), s);
        throw;
    }

    sum.steps = n;
    sum.t_final = s.t;
    write_checkpoint((dir / "final.ckpt").string(), s);

    const double fit_b = (cfg.fit_t_b > 0.0) ? cfg.fit_t_b : cfg.t_end;
    try {
        sum.fit_u_l2_sq = decay_fit(ts, u2, cfg.fit_t_a, fit_b);
        sum.fit_uth_l2_sq = decay_fit(ts, uth2, cfg.fit_t_a, fit_b);
        sum.fit_r_uth_l2_sq = decay_fit(ts, ruth2, cfg.fit_t_a, fit_b);
        sum.fits_valid = true;
    } catch (const std::domain_error&) {
        sum.fits_valid = false;  // short run or zero series; summary omits fits
    }

    write_summary((dir / "summary.txt").string(), sum, cfg);
    return sum;
}

}  // namespace axi
