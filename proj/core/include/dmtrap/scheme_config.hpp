#pragma once

#include "dmtrap/potential.hpp"
#include "dmtrap/units.hpp"
#include "dmtrap/wall.hpp"

namespace dmtrap {

/// Full description of one diode-mirror run: wall trajectories, the Gaussian
/// potential profiles used by the quantum engine, and the run horizon.
/// The classical engine treats diode and mirror as ideal (infinitely thin
/// and infinitely high) and ignores the potentials and the quench.
struct SchemeConfig {
    Units units;

    WallTrajectory diode = WallTrajectory::linear(0.9);
    WallTrajectory mirror = WallTrajectory::linear(1.0);
    WallTrajectory quench = WallTrajectory::linear(0.98);  // quantum only

    GaussianPotentialSpec pot_diode{5e6, 1e-4, ExponentConvention::HalfSigmaSquared, false};
    GaussianPotentialSpec pot_mirror{5e6, 1e-4, ExponentConvention::HalfSigmaSquared, false};
    GaussianPotentialSpec pot_quench{4e4, 6e-4, ExponentConvention::HalfSigmaSquared, true};

    double total_time = 1.0;
};

/// Checks every invariant and returns the validated configuration.
/// Violations throw std::invalid_argument naming the offending field;
/// matched wall kinds with mirror not strictly ahead of the diode
/// (sampled on (0, T]) are hard errors.
SchemeConfig validate_config(const SchemeConfig& cfg);

/// Convenience builders for the two standard wall schemes.  The sqrt scheme
/// matches the linear endpoints when alpha = v * sqrt(T).
SchemeConfig make_linear_scheme(double v_d, double v_m, double total_time);
SchemeConfig make_sqrt_scheme(double alpha_d, double alpha_m, double total_time);

}  // namespace dmtrap
