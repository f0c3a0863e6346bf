#include "axiswirl/scenarios.hpp"

#include <cmath>
#include <random>

namespace axi {

namespace {

// rho - 1 profile vanishing like r^2 at the axis: (1/rho - 1)/r is bounded
// and peaks at a smooth interior point, which keeps it stable under
// resampling (an |r|-type kink would be first-order at the axis).
double density_bump(double r, double z, double contrast, double w) {
    const double s = std::sqrt(r * r + z * z) / w;
    return contrast * (r * r / (w * w + r * r)) * std::exp(-s * s);
}

State assemble(const Grid& g, const ScalarField& psi, const ScalarField& uth,
               const ScalarField& rho) {
    State s = make_state(g);
    s.rho = rho;
    VelocityTriple u = from_stream_function(psi, uth);
    s.ur = u.ur;
    s.uth = u.uth;
    s.u3 = u.u3;
    sync_ghosts(s.rho, Outer::ZeroGradient, Outer::ZeroGradient);
    sync_ghosts(s.ur, Outer::Dirichlet0, Outer::Dirichlet0);
    sync_ghosts(s.uth, Outer::Dirichlet0, Outer::Dirichlet0);
    sync_ghosts(s.u3, Outer::Dirichlet0, Outer::Dirichlet0);
    return s;
}

}  // namespace

std::vector<std::string> scenario_names() {
    return {"no-swirl", "small-swirl", "homogeneous", "vortex-ring", "pure-swirl-column"};
}

State builtin_scenario(const Grid& g, const std::string& name, const ScenarioParams& p) {
    if (!(p.width > 0.0)) throw ConfigError("scenario: width must be positive");
    const double w2 = p.width * p.width;
    const double sw = (p.swirl_width > 0.0) ? p.swirl_width : p.width;
    const double sw2 = sw * sw;

    ScalarField psi = make_field(g, Loc::Node, Parity::Odd);
    ScalarField uth = make_field(g, Loc::Cell, Parity::Odd);
    ScalarField rho = make_field(g, Loc::Cell, Parity::Even);
    rho.fill(1.0);

    auto gaussian_roll = [&](double amp) {
        psi.sample([&](double r, double z) { return amp * r * std::exp(-(r * r + z * z) / w2); });
        apply_axis_parity(psi);
    };
    auto gaussian_swirl = [&](double amp) {
        uth.sample([&](double r, double z) { return amp * r * std::exp(-(r * r + z * z) / sw2); });
    };
    auto bumped_density = [&](double contrast) {
        rho.sample([&](double r, double z) { return 1.0 + density_bump(r, z, contrast, p.width); });
    };

    if (name == "no-swirl") {
        gaussian_roll(p.amplitude);
        bumped_density(p.density_contrast);
    } else if (name == "small-swirl") {
        gaussian_roll(p.amplitude);
        gaussian_swirl(p.swirl);
        bumped_density(p.density_contrast);
    } else if (name == "homogeneous") {
        gaussian_roll(p.amplitude);
        gaussian_swirl(p.swirl);
    } else if (name == "vortex-ring") {
        // Ring with nonzero hydrodynamic impulse: the stream function keeps
        // the dipole far field psi ~ r/|x|^3, regularized at scale width.
        // A Gaussian roll has zero impulse (its Stokes stream function is
        // compact), so its energy lacks the slow impulse-driven component.
        psi.sample([&](double r, double z) {
            const double d2 = r * r + z * z + w2;
            return p.amplitude * r / (d2 * std::sqrt(d2));
        });
        apply_axis_parity(psi);
        gaussian_swirl(p.swirl);
    } else if (name == "pure-swirl-column") {
        // Oseen vortex profile, z-independent; finite at the axis
        // (~ swirl * r / (8 pi)).
        uth.sample([&](double r, double) {
            return p.swirl * (1.0 - std::exp(-0.25 * r * r)) / (kTwoPi * r);
        });
    } else {
        throw ConfigError("unknown scenario: " + name);
    }

    return assemble(g, psi, uth, rho);
}

State random_localized(const Grid& g, std::uint64_t seed, double max_amplitude,
                       double max_contrast) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double zr = 0.3 * g.Z;  // keep the data away from the walls
    std::uniform_real_distribution<double> zc(-zr, zr);
    std::uniform_real_distribution<double> wd(0.6, 1.4);

    struct Bump {
        double a, z0, w2;
    };
    auto draw = [&](double cap) {
        Bump b;
        b.a = cap * amp(rng);
        b.z0 = zc(rng);
        const double w = wd(rng);
        b.w2 = w * w;
        return b;
    };
    Bump s1 = draw(max_amplitude), s2 = draw(max_amplitude);
    Bump t1 = draw(max_amplitude);
    Bump d1 = draw(max_contrast);
    d1.a = max_contrast * (0.2 + 0.8 * unit(rng));  // keep rho >= 1 - cap

    ScalarField psi = make_field(g, Loc::Node, Parity::Odd);
    psi.sample([&](double r, double z) {
        auto roll = [&](const Bump& b) {
            const double dz = z - b.z0;
            return b.a * r * std::exp(-(r * r + dz * dz) / b.w2);
        };
        return roll(s1) + roll(s2);
    });
    apply_axis_parity(psi);

    ScalarField uth = make_field(g, Loc::Cell, Parity::Odd);
    uth.sample([&](double r, double z) {
        const double dz = z - t1.z0;
        return t1.a * r * std::exp(-(r * r + dz * dz) / t1.w2);
    });

    ScalarField rho = make_field(g, Loc::Cell, Parity::Even);
    rho.sample([&](double r, double z) {
        const double dz = z - d1.z0;
        const double s = (r * r + dz * dz) / d1.w2;
        return 1.0 + d1.a * (r * r / (d1.w2 + r * r)) * std::exp(-s);
    });

    return assemble(g, psi, uth, rho);
}

}  // namespace axi
