#pragma once

#include <complex>
#include <vector>

#include "dmtrap/quantum/grid.hpp"

namespace dmtrap::quantum {

/// Internal-level tag of the single-component wavefunction: PreJump states
/// evolve under the absorbing Hamiltonian (mirror + imaginary quench),
/// PostJump states under the real mirror + diode Hamiltonian.
enum class Level { PreJump, PostJump };

enum class InitMode {
    Standard,  // enforces <x> = x0, std_x = dx, <v> = v0, std_v = dv
    Literal    // quoted closed form transcribed as printed, then normalized
};

struct WaveFunction {
    SpatialGrid grid;
    std::vector<std::complex<double>> amp;
    Level level = Level::PreJump;
    double t = 0.0;

    /// Discrete norm^2 = sum |amp|^2 * dx.
    double norm_sq() const;
    void normalize();

    std::vector<double> position_density() const;  // |psi|^2, integrates to norm^2
    /// Momentum-space probability mass per wavenumber sample (sums to
    /// norm^2 by the discrete Parseval identity); index order matches
    /// grid.wavenumber.
    std::vector<double> momentum_mass() const;
};

struct PacketMoments {
    double mean_x, std_x;
    double mean_v, std_v;
    double norm_sq;
    double norm_sq_momentum;  // Parseval cross-check
};

PacketMoments packet_moments(const WaveFunction& psi, double mass, double hbar = 1.0);

/// Gaussian wavepacket with velocity chirp.  Standard mode places the packet
/// at exactly (x0, v0) with spreads (dx, dv); the chirp parameter is
/// 2c with c = sqrt(dx^2 m^2 dv^2 / hbar^2 - 1/4), which vanishes for a
/// minimum-uncertainty packet.  Literal mode divides the whole exponent by
/// (1 + i c) as in the quoted closed form and renormalizes.  Sub-Heisenberg
/// (dx, dv) and packets whose tails touch the grid boundary are rejected.
WaveFunction init_wavepacket(const SpatialGrid& grid, double x0, double dx,
                             double v0, double dv, double mass,
                             InitMode mode = InitMode::Standard,
                             double hbar = 1.0);

}  // namespace dmtrap::quantum
