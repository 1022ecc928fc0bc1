#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dmtrap/quantum/trajectory.hpp"

namespace dmtrap::quantum {

/// One stochastic run of the full three-level unraveling: the spinor
/// (psi_1, psi_2, psi_3) evolves under the conditional Hamiltonian
/// H_3L - i hbar gamma/2 |3><3| with coupling hbar Omega_p(x,t)/2 between
/// levels 1 and 3; at the norm threshold the jump operator sqrt(gamma)
/// |2><3| fires and the run continues unitarily in level 2.
struct ThreeLevelRecord {
    std::uint64_t seed = 0;
    bool jumped = false;
    double t_jump = 0.0;
    std::array<double, 3> populations{};
    std::vector<double> position_density;  // probability mass per grid point
    std::array<std::vector<std::complex<double>>, 3> spinor;
};

/// Requires a toy-scale grid (N <= 256) and cfg.unraveling == ThreeLevel.
ThreeLevelRecord three_level_trajectory(const QuantumRunConfig& cfg,
                                        std::uint64_t seed);

struct ThreeLevelEnsembleResult {
    std::vector<double> mean_position_density;  // mass per grid point
    std::array<double, 3> mean_populations{};
    std::vector<TrajectoryLogEntry> log;
};

ThreeLevelEnsembleResult run_three_level_ensemble(const QuantumRunConfig& cfg,
                                                  unsigned n_threads = 0);

}  // namespace dmtrap::quantum
