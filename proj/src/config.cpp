#include "axiswirl/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace axi {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace((unsigned char)s[a])) ++a;
    while (b > a && std::isspace((unsigned char)s[b - 1])) --b;
    return s.substr(a, b - a);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    throw ConfigError(origin + ":" + std::to_string(line) + ": " + msg);
}

double to_double(const std::string& origin, int line, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        fail(origin, line, "expected a number, got '" + v + "'");
    }
}

long to_long(const std::string& origin, int line, const std::string& v) {
    try {
        std::size_t pos = 0;
        const long d = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        fail(origin, line, "expected an integer, got '" + v + "'");
    }
}

bool to_bool(const std::string& origin, int line, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    fail(origin, line, "expected a boolean, got '" + v + "'");
}

}  // namespace

ScenarioConfig parse_config_text(const std::string& text, const std::string& origin) {
    ScenarioConfig cfg;
    std::istringstream in(text);
    std::string raw, section;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        const std::size_t hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(origin, lineno, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "grid" && section != "time" && section != "scenario" &&
                section != "output" && section != "verify")
                fail(origin, lineno, "unknown section [" + section + "]");
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail(origin, lineno, "expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty()) fail(origin, lineno, "empty key or value");

        if (section == "grid") {
            if (key == "R") cfg.R = to_double(origin, lineno, val);
            else if (key == "Z") cfg.Z = to_double(origin, lineno, val);
            else if (key == "nr") cfg.nr = (int)to_long(origin, lineno, val);
            else if (key == "nz") cfg.nz = (int)to_long(origin, lineno, val);
            else fail(origin, lineno, "unknown [grid] key '" + key + "'");
        } else if (section == "time") {
            if (key == "t_end") cfg.t_end = to_double(origin, lineno, val);
            else if (key == "safety") cfg.safety = to_double(origin, lineno, val);
            else if (key == "max_steps") cfg.max_steps = to_long(origin, lineno, val);
            else if (key == "dt") cfg.dt = to_double(origin, lineno, val);
            else if (key == "elliptic_tol")
                cfg.elliptic_tol = to_double(origin, lineno, val);
            else fail(origin, lineno, "unknown [time] key '" + key + "'");
        } else if (section == "scenario") {
            if (key == "name") cfg.scenario = val;
            else if (key == "amplitude") cfg.params.amplitude = to_double(origin, lineno, val);
            else if (key == "swirl") cfg.params.swirl = to_double(origin, lineno, val);
            else if (key == "density_contrast")
                cfg.params.density_contrast = to_double(origin, lineno, val);
            else if (key == "width") cfg.params.width = to_double(origin, lineno, val);
            else if (key == "swirl_width")
                cfg.params.swirl_width = to_double(origin, lineno, val);
            else if (key == "C") cfg.smallness_c = to_double(origin, lineno, val);
            else fail(origin, lineno, "unknown [scenario] key '" + key + "'");
        } else if (section == "output") {
            if (key == "directory") cfg.directory = val;
            else if (key == "stride") cfg.stride = (int)to_long(origin, lineno, val);
            else if (key == "checkpoint_every")
                cfg.checkpoint_every = to_long(origin, lineno, val);
            else if (key == "fit_t_a") cfg.fit_t_a = to_double(origin, lineno, val);
            else if (key == "fit_t_b") cfg.fit_t_b = to_double(origin, lineno, val);
            else fail(origin, lineno, "unknown [output] key '" + key + "'");
        } else if (section == "verify") {
            if (key == "identity_residuals")
                cfg.identity_residuals = to_bool(origin, lineno, val);
            else fail(origin, lineno, "unknown [verify] key '" + key + "'");
        } else {
            fail(origin, lineno, "key outside any section");
        }
    }
    if (!(cfg.R > 0.0 && cfg.Z > 0.0)) throw ConfigError(origin + ": R, Z must be positive");
    if (cfg.nr < 4 || cfg.nz < 4) throw ConfigError(origin + ": nr, nz must be >= 4");
    if (!(cfg.t_end > 0.0)) throw ConfigError(origin + ": t_end must be positive");
    if (!(cfg.safety > 0.0 && cfg.safety <= 1.0))
        throw ConfigError(origin + ": safety must be in (0,1]");
    if (!(cfg.elliptic_tol > 0.0 && cfg.elliptic_tol <= 1e-4))
        throw ConfigError(origin + ": elliptic_tol must be in (0, 1e-4]");
    if (cfg.stride < 1) throw ConfigError(origin + ": stride must be >= 1");
    if (cfg.max_steps < 1) throw ConfigError(origin + ": max_steps must be >= 1");
    return cfg;
}

ScenarioConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path);
}

}  // namespace axi
