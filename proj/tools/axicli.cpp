#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "axiswirl/checkpoint.hpp"
#include "axiswirl/runner.hpp"
#include "axiswirl/verify.hpp"

namespace {

int cmd_run(const std::string& config_path) {
    axi::ScenarioConfig cfg = axi::parse_config(config_path);
    axi::RunSummary s = axi::run_scenario(cfg);
    std::cout << "wrote " << s.directory << " (" << s.steps << " steps, t = "
              << s.t_final << ", max div = " << s.max_div_linf << ")\n";
    return 0;
}

int cmd_verify(const std::string& suite, int nr, int nz) {
    axi::verify::SuiteResult r = axi::verify::run_suite(suite, nr, nz);
    axi::verify::print(r, std::cout);
    return r.pass ? 0 : 1;
}

int cmd_fit(const std::string& csv_path, const std::string& column,
            const std::string& window) {
    double a = 0.0, b = 0.0;
    {
        std::istringstream w(window);
        char comma = 0;
        if (!(w >> a >> comma >> b) || comma != ',')
            throw axi::ConfigError("--window expects 'a,b'");
    }
    std::ifstream in(csv_path);
    if (!in) throw axi::ConfigError("cannot open " + csv_path);
    std::string line;
    std::vector<std::string> cols;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream h(line);
        std::string c;
        while (std::getline(h, c, ',')) cols.push_back(c);
        break;
    }
    int tcol = -1, ycol = -1;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (cols[k] == "t") tcol = (int)k;
        if (cols[k] == column) ycol = (int)k;
    }
    if (tcol < 0 || ycol < 0)
        throw axi::ConfigError("column '" + column + "' not found in " + csv_path);
    std::vector<double> ts, ys;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        int k = 0;
        double tv = 0.0, yv = 0.0;
        while (std::getline(row, cell, ',')) {
            if (k == tcol) tv = std::stod(cell);
            if (k == ycol) yv = std::stod(cell);
            ++k;
        }
        ts.push_back(tv);
        ys.push_back(yv);
    }
    axi::DecayFit fit = axi::decay_fit(ts, ys, a, b);
    std::cout << "alpha = " << fit.alpha << "\namplitude = " << fit.amplitude
              << "\nrms_log_residual = " << fit.rms_log_residual
              << "\nsamples = " << fit.samples << "\n";
    return 0;
}

int cmd_resume(const std::string& ckpt, double t_end, const std::string& dir,
               int stride) {
    axi::State s = axi::read_checkpoint(ckpt);
    axi::ScenarioConfig cfg;
    cfg.R = s.grid.R;
    cfg.Z = s.grid.Z;
    cfg.nr = s.grid.nr;
    cfg.nz = s.grid.nz;
    cfg.t_end = t_end;
    cfg.directory = dir;
    cfg.stride = stride;
    if (!(t_end > s.t))
        throw axi::ConfigError("resume: --t-end must exceed the checkpoint time");
    axi::RunSummary sum = axi::run_from_state(std::move(s), cfg);
    std::cout << "wrote " << sum.directory << " (" << sum.steps << " steps, t = "
              << sum.t_final << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"axisymmetric swirling-flow laboratory"};
    app.require_subcommand(1);

    std::string config_path, suite, csv_path, column, window = "5,50";
    std::string ckpt, resume_dir = "out-resume";
    int nr = 0, nz = 0, stride = 1;
    double t_end = 0.0;

    auto* run = app.add_subcommand("run", "run a scenario config");
    run->add_option("config", config_path, "INI config file")->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name")->required();
    verify->add_option("--nr", nr, "base radial resolution override");
    verify->add_option("--nz", nz, "base axial resolution override");

    auto* fit = app.add_subcommand("fit", "fit a decay exponent from a diagnostics CSV");
    fit->add_option("csv", csv_path, "diagnostics.csv path")->required();
    fit->add_option("--column", column, "column to fit")->required();
    fit->add_option("--window", window, "fit window 'a,b'");

    auto* resume = app.add_subcommand("resume", "continue a run from a checkpoint");
    resume->add_option("checkpoint", ckpt, "checkpoint file")->required();
    resume->add_option("--t-end", t_end, "new end time")->required();
    resume->add_option("--directory", resume_dir, "output directory");
    resume->add_option("--stride", stride, "diagnostics stride");

    try {
        app.parse(argc, argv);
        if (run->parsed()) return cmd_run(config_path);
        if (verify->parsed()) return cmd_verify(suite, nr, nz);
        if (fit->parsed()) return cmd_fit(csv_path, column, window);
        if (resume->parsed()) return cmd_resume(ckpt, t_end, resume_dir, stride);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const axi::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}
