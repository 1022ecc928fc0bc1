#pragma once

#include <functional>
#include <memory>

#include "dmtrap/quantum/fft.hpp"
#include "dmtrap/quantum/wavefunction.hpp"
#include "dmtrap/scheme_config.hpp"

namespace dmtrap::quantum {

/// Second-order kinetic-potential-kinetic splitting on the FFT grid.
/// Potentials are sampled at the step midpoint t + dt/2 with the walls at
/// their instantaneous positions.  PreJump states see the real mirror and
/// the imaginary quench (norm decays); PostJump states see mirror + diode.
/// Gaussian factors are applied only inside a window where they exceed
/// machine relevance, and the composed factor is reused verbatim while the
/// wall positions do not move (rest phases), keeping the step FFT-bound.
class StrangPropagator {
  public:
    StrangPropagator(const SpatialGrid& grid, double mass, double dt,
                     double hbar = 1.0);

    void set_dt(double dt);
    double dt() const { return dt_; }

    /// One full step from time t to t + dt.
    void step(WaveFunction& psi, const SchemeConfig& scheme, double t);

    /// `n_steps` steps from t0 with the interior half-kinetics merged
    /// (algebraically identical to repeated step()).  After each step's
    /// potential factor, on_step(step_index, norm_sq) may stop the loop;
    /// norm_sq there equals the end-of-step norm since the trailing
    /// kinetic factor is unitary.  Returns the number of steps taken.
    std::size_t evolve(
        WaveFunction& psi, const SchemeConfig& scheme, double t0,
        std::size_t n_steps,
        const std::function<bool(std::size_t, double)>& on_step = {});

  private:
    struct FactorWindow {
        std::size_t begin = 0;
        std::vector<std::complex<double>> factor;
    };

    void rebuild_phases();
    void apply_kinetic(WaveFunction& psi, bool half) const;
    void apply_potential(WaveFunction& psi, const SchemeConfig& scheme,
                         double t_mid);
    FactorWindow build_gaussian_factor(const GaussianPotentialSpec& pot,
                                       double center, bool imaginary_term) const;

    SpatialGrid grid_;
    double mass_;
    double hbar_;
    double dt_;
    std::shared_ptr<const Fft> fft_;
    std::vector<std::complex<double>> kin_half_;
    std::vector<std::complex<double>> kin_full_;

    struct {
        bool valid = false;
        Level level = Level::PreJump;
        double x_mirror = 0.0, x_other = 0.0, dt = 0.0;
        std::vector<FactorWindow> windows;
    } cache_;
};

}  // namespace dmtrap::quantum
