#pragma once

#include <Eigen/Dense>
#include <array>
#include <span>
#include <vector>

#include "dmtrap/quantum/grid.hpp"
#include "dmtrap/quantum/wavefunction.hpp"
#include "dmtrap/scheme_config.hpp"

namespace dmtrap::lindblad {

/// Density operator of the three-level particle on a coarse grid, stored
/// dense in the level-major basis index = level * N + point (levels 0..2
/// are the internal states |1>, |2>, |3>).  Entry (i, j) carries the
/// probability-mass convention rho_ij = psi_i psi_j^* dx, so trace = 1.
struct DensityMatrix3L {
    quantum::SpatialGrid grid;
    Eigen::MatrixXcd rho;
    double t = 0.0;

    double trace_real() const { return rho.trace().real(); }
    double hermiticity_error() const {
        return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    }
    /// Smallest eigenvalue; positivity check, computed on demand.
    double min_eigenvalue() const;
};

/// Operators entering the three-level master equation: spectral kinetic
/// matrix, mirror potential on levels 1 and 2, diode potential on level 2,
/// coupling hbar*Omega_p(x,t)/2 between levels 1 and 3, and the decay rate
/// gamma from level 3 to level 2.  The coupling amplitude derives from the
/// quench height via omega0 = sqrt(2 gamma V0_c / hbar), and Omega_p has
/// Gaussian width sigma_c.
struct ThreeLevelOperators {
    quantum::SpatialGrid grid;
    SchemeConfig scheme;
    double gamma = 0.0;
    Eigen::MatrixXcd kinetic;  // N x N, Hermitian

    double omega0() const;
    Eigen::VectorXd mirror_profile(double t) const;
    Eigen::VectorXd diode_profile(double t) const;
    Eigen::VectorXd coupling_profile(double t) const;  // hbar*Omega_p/2

    /// Builds the spectral kinetic matrix for the grid; N is capped at 128.
    static ThreeLevelOperators build(const quantum::SpatialGrid& grid,
                                     const SchemeConfig& scheme, double gamma);
};

/// rho = |psi><psi| in internal level |1>.
DensityMatrix3L pure_state_density(const quantum::WaveFunction& psi);

/// Right-hand side of the master equation:
/// -(i/hbar)[H, rho] - (gamma/2){rho P3 + P3 rho} + gamma S rho_33 S^dag.
Eigen::MatrixXcd liouvillian_apply(const DensityMatrix3L& rho,
                                   const ThreeLevelOperators& ops, double t);

/// Classic fourth-order explicit stepping of liouvillian_apply.  Trace and
/// Hermiticity are re-verified every `check_stride` steps; drift beyond
/// tolerance aborts with a diagnostic.
DensityMatrix3L evolve_master(const DensityMatrix3L& rho0,
                              const ThreeLevelOperators& ops,
                              double total_time, double dt,
                              int check_stride = 100,
                              double trace_tol = 1e-6,
                              double herm_tol = 1e-8);

struct LevelDensities {
    std::array<double, 3> populations{};
    std::array<std::vector<double>, 3> mass;  // per level, per grid point
    std::vector<double> total_mass;
};

LevelDensities level_densities(const DensityMatrix3L& rho);

struct UnravelingComparison {
    double l1_position = 0.0;
    std::array<double, 3> population_error{};
};

/// L1 distance between the oracle's total position mass and a
/// trajectory-averaged one, plus absolute population errors.  Sizes must
/// match the oracle grid.
UnravelingComparison compare_with_unraveling(
    const DensityMatrix3L& oracle, std::span<const double> position_mass,
    const std::array<double, 3>& populations);

}  // namespace dmtrap::lindblad
