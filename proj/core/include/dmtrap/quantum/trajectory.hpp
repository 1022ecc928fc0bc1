#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dmtrap/ensemble/histogram.hpp"
#include "dmtrap/quantum/propagator.hpp"
#include "dmtrap/quantum/wavefunction.hpp"
#include "dmtrap/scheme_config.hpp"

namespace dmtrap::quantum {

enum class JumpMode { ApplyOperator, RenormalizeOnly };
enum class UnravelingKind { EffectivePotential, ThreeLevel };

struct PacketSpec {
    double x0 = -0.8;
    double dx = 0.1;
    double v0 = 10.0;
    double dv = 5.0;
};

/// Everything one stochastic wavefunction run needs.  dt_absorb is the
/// pre-jump step (defaults to dt); it bounds the jump-time resolution and
/// must keep the norm loss per step at or below max_step_norm_loss, which
/// is validated while stepping.  gamma only matters for the ThreeLevel
/// unraveling, where the coupling amplitude is derived from the quench
/// height via omega0 = sqrt(2 gamma V0_c / hbar).
struct QuantumRunConfig {
    SchemeConfig scheme;
    SpatialGrid grid{-1.8, 1.1, 8192};
    PacketSpec packet;
    double dt = 1e-5;
    double dt_absorb = 0.0;  // 0 -> dt
    int n_traj = 200;
    JumpMode jump_mode = JumpMode::ApplyOperator;
    UnravelingKind unraveling = UnravelingKind::EffectivePotential;
    double gamma = 100.0;
    InitMode init_mode = InitMode::Standard;
    std::uint64_t seed = 1;
    double v_max_hint = 0.0;  // 0 -> v0 + 5 dv
    double max_step_norm_loss = 1e-3;
    double boundary_mass_limit = 1e-6;
    std::size_t monitor_stride = 64;

    double effective_dt_absorb() const { return dt_absorb > 0.0 ? dt_absorb : dt; }
    double v_max() const {
        return v_max_hint > 0.0 ? v_max_hint : packet.v0 + 5.0 * packet.dv;
    }
    double omega0() const;
};

/// Validates dt, trajectory count and that the grid resolves the fastest
/// configured momentum: spacing < pi * hbar / (m * v_max).
QuantumRunConfig validate_quantum_config(const QuantumRunConfig& cfg);

struct TrajectoryRecord {
    std::uint64_t seed = 0;
    bool jumped = false;
    double t_jump = 0.0;  // valid only when jumped
    WaveFunction final_state;
    std::vector<double> jump_density;  // |psi|^2 right after the jump
};

/// Steps the PreJump state under the absorbing Hamiltonian until its norm^2
/// falls to the threshold r or t reaches total_time.  The jump time is the
/// end of the step in which the threshold was crossed.  Throws if a single
/// step loses more than cfg.max_step_norm_loss of the norm (dt_absorb too
/// coarse) or if boundary-adjacent probability exceeds the configured limit.
std::optional<double> evolve_until_jump(WaveFunction& psi,
                                        const QuantumRunConfig& cfg, double r,
                                        StrangPropagator& prop);

/// Applies the jump: ApplyOperator weights amplitudes by
/// sqrt(V_c(x - x_c(t_jump))) before renormalizing, RenormalizeOnly only
/// renormalizes.  Either way the level flips to PostJump.  A state with no
/// overlap with the quench profile (zero post-jump norm) is an error.
void apply_jump(WaveFunction& psi, const QuantumRunConfig& cfg, double t_jump);

/// One full stochastic run: init, absorb until the jump, then real-potential
/// evolution to total_time (no jump: the surviving state is renormalized).
/// Bit-deterministic for a given seed.
TrajectoryRecord run_trajectory(const QuantumRunConfig& cfg, std::uint64_t seed);

struct TrajectoryLogEntry {
    std::uint64_t seed = 0;
    bool jumped = false;
    double t_jump = 0.0;
};

struct QuantumEnsembleResult {
    ensemble::Histogram1D position;
    ensemble::Histogram1D velocity;
    std::vector<double> grid_density;  // mean probability mass per grid point
    std::vector<TrajectoryLogEntry> log;
};

/// Averages n_traj independent trajectories (seeds derived from cfg.seed)
/// into normalized position and velocity histograms.  The reduction is
/// performed in trajectory order, so results do not depend on the worker
/// count.
QuantumEnsembleResult run_quantum_ensemble(const QuantumRunConfig& cfg,
                                           std::span<const double> edges_x,
                                           std::span<const double> edges_v,
                                           unsigned n_threads = 0);

std::uint64_t derive_trajectory_seed(std::uint64_t master, std::uint64_t index);

}  // namespace dmtrap::quantum
