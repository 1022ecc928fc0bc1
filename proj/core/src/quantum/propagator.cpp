#include "dmtrap/quantum/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dmtrap::quantum {

namespace {
// Window cutoff: the Gaussian factor is skipped where the exponent is below
// exp(-45) ~ 3e-20, far under the phase resolution of a double.
constexpr double kExponentCutoff = 45.0;
}  // namespace

StrangPropagator::StrangPropagator(const SpatialGrid& grid, double mass,
                                   double dt, double hbar)
    : grid_(grid), mass_(mass), hbar_(hbar), dt_(dt),
      fft_(shared_fft(grid.n)) {
    if (!(mass > 0.0)) throw std::invalid_argument("propagator: mass must be > 0");
    if (!(dt > 0.0)) throw std::invalid_argument("propagator: dt must be > 0");
    rebuild_phases();
}

void StrangPropagator::set_dt(double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("propagator: dt must be > 0");
    if (dt == dt_) return;
    dt_ = dt;
    cache_.valid = false;
    rebuild_phases();
}

void StrangPropagator::rebuild_phases() {
    kin_half_.resize(grid_.n);
    kin_full_.resize(grid_.n);
    for (std::size_t j = 0; j < grid_.n; ++j) {
        const double k = grid_.wavenumber(j);
        const double w = hbar_ * k * k / (2.0 * mass_);  // energy / hbar
        kin_half_[j] = std::polar(1.0, -w * dt_ * 0.5);
        kin_full_[j] = std::polar(1.0, -w * dt_);
    }
}

void StrangPropagator::apply_kinetic(WaveFunction& psi, bool half) const {
    fft_->forward(psi.amp.data());
    const auto& ph = half ? kin_half_ : kin_full_;
    for (std::size_t j = 0; j < psi.amp.size(); ++j) psi.amp[j] *= ph[j];
    fft_->inverse(psi.amp.data());
}

StrangPropagator::FactorWindow StrangPropagator::build_gaussian_factor(
    const GaussianPotentialSpec& pot, double center, bool imaginary_term) const {
    FactorWindow w;
    if (pot.amplitude == 0.0) return w;
    const double denom = exponent_denominator(pot);
    const double half_width = std::sqrt(kExponentCutoff * denom);
    const double dx = grid_.spacing();
    const auto lo = static_cast<std::ptrdiff_t>(
        std::ceil((center - half_width - grid_.x_min) / dx));
    const auto hi = static_cast<std::ptrdiff_t>(
        std::floor((center + half_width - grid_.x_min) / dx));
    const auto i0 = std::max<std::ptrdiff_t>(lo, 0);
    const auto i1 = std::min<std::ptrdiff_t>(hi, static_cast<std::ptrdiff_t>(grid_.n) - 1);
    if (i0 > i1) return w;
    w.begin = static_cast<std::size_t>(i0);
    w.factor.resize(static_cast<std::size_t>(i1 - i0) + 1);
    const double scale = dt_ / hbar_;
    for (std::size_t k = 0; k < w.factor.size(); ++k) {
        const double u = grid_.point(w.begin + k) - center;
        const double v = pot.amplitude * std::exp(-u * u / denom) * scale;
        w.factor[k] = imaginary_term ? std::complex<double>(std::exp(-v), 0.0)
                                     : std::polar(1.0, -v);
    }
    return w;
}

void StrangPropagator::apply_potential(WaveFunction& psi,
                                       const SchemeConfig& scheme,
                                       double t_mid) {
    const double xm = wall_position(scheme.mirror, t_mid);
    const double x2 = psi.level == Level::PreJump
                          ? wall_position(scheme.quench, t_mid)
                          : wall_position(scheme.diode, t_mid);
    if (!cache_.valid || cache_.level != psi.level || cache_.x_mirror != xm ||
        cache_.x_other != x2 || cache_.dt != dt_) {
        cache_.windows.clear();
        cache_.windows.push_back(build_gaussian_factor(scheme.pot_mirror, xm, false));
        if (psi.level == Level::PreJump)
            cache_.windows.push_back(build_gaussian_factor(scheme.pot_quench, x2, true));
        else
            cache_.windows.push_back(build_gaussian_factor(scheme.pot_diode, x2, false));
        cache_.level = psi.level;
        cache_.x_mirror = xm;
        cache_.x_other = x2;
        cache_.dt = dt_;
        cache_.valid = true;
    }
    for (const auto& w : cache_.windows)
        for (std::size_t k = 0; k < w.factor.size(); ++k)
            psi.amp[w.begin + k] *= w.factor[k];
}

void StrangPropagator::step(WaveFunction& psi, const SchemeConfig& scheme,
                            double t) {
    apply_kinetic(psi, true);
    apply_potential(psi, scheme, t + 0.5 * dt_);
    apply_kinetic(psi, true);
    psi.t = t + dt_;
}

std::size_t StrangPropagator::evolve(
    WaveFunction& psi, const SchemeConfig& scheme, double t0,
    std::size_t n_steps, const std::function<bool(std::size_t, double)>& on_step) {
    if (n_steps == 0) return 0;
    apply_kinetic(psi, true);
    std::size_t taken = 0;
    for (std::size_t k = 1; k <= n_steps; ++k) {
        apply_potential(psi, scheme, t0 + (static_cast<double>(k) - 0.5) * dt_);
        taken = k;
        bool keep_going = k < n_steps;
        if (on_step && keep_going) keep_going = on_step(k, psi.norm_sq());
        if (!keep_going) {
            apply_kinetic(psi, true);
            break;
        }
        apply_kinetic(psi, false);
    }
    psi.t = t0 + static_cast<double>(taken) * dt_;
    if (on_step && taken == n_steps) on_step(taken, psi.norm_sq());
    return taken;
}

}  // namespace dmtrap::quantum
