#include "dmtrap/scheme_config.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dmtrap {

namespace {

void validate_potential(const GaussianPotentialSpec& p, const std::string& name) {
    if (!(p.amplitude >= 0.0))
        throw std::invalid_argument(name + ".amplitude must be >= 0");
    if (!(p.sigma > 0.0))
        throw std::invalid_argument(name + ".sigma must be > 0");
}

}  // namespace

SchemeConfig validate_config(const SchemeConfig& cfg) {
    validate_units(cfg.units);
    if (!(cfg.total_time > 0.0))
        throw std::invalid_argument("total_time must be > 0");

    const auto dk = cfg.diode.kind;
    const auto mk = cfg.mirror.kind;
    if (dk == WallTrajectory::Kind::Linear && mk == WallTrajectory::Kind::Linear) {
        if (!(cfg.mirror.v > cfg.diode.v))
            throw std::invalid_argument(
                "mirror.v must exceed diode.v (equal wall speeds give no "
                "velocity decrement per collision pair)");
    } else if (dk == WallTrajectory::Kind::Sqrt && mk == WallTrajectory::Kind::Sqrt) {
        if (!(cfg.mirror.alpha > cfg.diode.alpha))
            throw std::invalid_argument("mirror.alpha must exceed diode.alpha");
    } else if (dk == WallTrajectory::Kind::RestThenLinear &&
               mk == WallTrajectory::Kind::RestThenLinear) {
        if (!(cfg.mirror.v > cfg.diode.v))
            throw std::invalid_argument("mirror.v must exceed diode.v");
    }

    // Ordering x_m(t) > x_d(t), sampled over (0, T].
    constexpr int kSamples = 64;
    for (int i = 1; i <= kSamples; ++i) {
        const double t = cfg.total_time * static_cast<double>(i) / kSamples;
        if (!(wall_position(cfg.mirror, t) > wall_position(cfg.diode, t)))
            throw std::invalid_argument(
                "mirror must stay strictly ahead of the diode on (0, T], "
                "violated at t = " + std::to_string(t));
    }

    validate_potential(cfg.pot_diode, "pot_diode");
    validate_potential(cfg.pot_mirror, "pot_mirror");
    validate_potential(cfg.pot_quench, "pot_quench");
    return cfg;
}

SchemeConfig make_linear_scheme(double v_d, double v_m, double total_time) {
    SchemeConfig cfg;
    cfg.diode = WallTrajectory::linear(v_d);
    cfg.mirror = WallTrajectory::linear(v_m);
    cfg.quench = WallTrajectory::linear(0.98 * v_m);
    cfg.total_time = total_time;
    return validate_config(cfg);
}

SchemeConfig make_sqrt_scheme(double alpha_d, double alpha_m, double total_time) {
    SchemeConfig cfg;
    cfg.diode = WallTrajectory::sqrt_profile(alpha_d);
    cfg.mirror = WallTrajectory::sqrt_profile(alpha_m);
    cfg.quench = WallTrajectory::sqrt_profile(0.98 * alpha_m);
    cfg.total_time = total_time;
    return validate_config(cfg);
}

}  // namespace dmtrap
