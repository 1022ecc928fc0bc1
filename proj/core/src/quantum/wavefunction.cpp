#include "dmtrap/quantum/wavefunction.hpp"

#include <cmath>
#include <stdexcept>

#include "dmtrap/quantum/fft.hpp"

namespace dmtrap::quantum {

double WaveFunction::norm_sq() const {
    double s = 0.0;
    for (const auto& a : amp) s += std::norm(a);
    return s * grid.spacing();
}

void WaveFunction::normalize() {
    const double n2 = norm_sq();
    if (!(n2 > 0.0))
        throw std::runtime_error("normalize: wavefunction has zero norm");
    const double s = 1.0 / std::sqrt(n2);
    for (auto& a : amp) a *= s;
}

std::vector<double> WaveFunction::position_density() const {
    std::vector<double> d(amp.size());
    for (std::size_t i = 0; i < amp.size(); ++i) d[i] = std::norm(amp[i]);
    return d;
}

std::vector<double> WaveFunction::momentum_mass() const {
    std::vector<std::complex<double>> spec(amp.begin(), amp.end());
    const auto fft = shared_fft(grid.n);
    fft->forward(spec.data());
    // mass_j = |psi_hat_j|^2 dk with psi_hat = dx/sqrt(2 pi) * DFT
    const double dx = grid.spacing();
    const double dk = 2.0 * M_PI / (grid.x_max - grid.x_min);
    const double w = dx * dx / (2.0 * M_PI) * dk;
    std::vector<double> mass(amp.size());
    for (std::size_t j = 0; j < spec.size(); ++j) mass[j] = w * std::norm(spec[j]);
    return mass;
}

PacketMoments packet_moments(const WaveFunction& psi, double mass, double hbar) {
    PacketMoments m{};
    const double dx = psi.grid.spacing();
    double n2 = 0.0, sx = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < psi.amp.size(); ++i) {
        const double p = std::norm(psi.amp[i]) * dx;
        const double x = psi.grid.point(i);
        n2 += p;
        sx += p * x;
        sxx += p * x * x;
    }
    m.norm_sq = n2;
    m.mean_x = sx / n2;
    m.std_x = std::sqrt(std::max(0.0, sxx / n2 - m.mean_x * m.mean_x));

    const auto pm = psi.momentum_mass();
    double nk = 0.0, sv = 0.0, svv = 0.0;
    for (std::size_t j = 0; j < pm.size(); ++j) {
        const double v = hbar * psi.grid.wavenumber(j) / mass;
        nk += pm[j];
        sv += pm[j] * v;
        svv += pm[j] * v * v;
    }
    m.norm_sq_momentum = nk;
    m.mean_v = sv / nk;
    m.std_v = std::sqrt(std::max(0.0, svv / nk - m.mean_v * m.mean_v));
    return m;
}

WaveFunction init_wavepacket(const SpatialGrid& grid, double x0, double dx,
                             double v0, double dv, double mass, InitMode mode,
                             double hbar) {
    if (!(dx > 0.0) || !(dv > 0.0))
        throw std::invalid_argument("init_wavepacket: dx and dv must be > 0");
    const double c2 = dx * dx * mass * mass * dv * dv / (hbar * hbar) - 0.25;
    if (c2 < 0.0)
        throw std::invalid_argument(
            "init_wavepacket: dx*dv below the Heisenberg bound hbar/(2m)");
    const double c = std::sqrt(c2);

    WaveFunction psi;
    psi.grid = grid;
    psi.amp.resize(grid.n);
    psi.level = Level::PreJump;
    psi.t = 0.0;

    const double k0 = mass * v0 / hbar;
    if (mode == InitMode::Standard) {
        // exp(-(x-x0)^2/(4 dx^2) * (1 - 2ic) + i k0 (x-x0))
        const std::complex<double> a =
            (1.0 / (4.0 * dx * dx)) * std::complex<double>(1.0, -2.0 * c);
        for (std::size_t i = 0; i < grid.n; ++i) {
            const double u = grid.point(i) - x0;
            psi.amp[i] = std::exp(-a * (u * u) +
                                  std::complex<double>(0.0, k0 * u));
        }
    } else {
        // whole exponent divided by (1 + ic), as printed
        const std::complex<double> denom(1.0, c);
        const double g = mass * mass * dv * dv / (hbar * hbar);
        for (std::size_t i = 0; i < grid.n; ++i) {
            const double u = grid.point(i) - x0;
            const std::complex<double> arg =
                -(g * u * u + std::complex<double>(0.0, k0 * u)) / denom;
            psi.amp[i] = std::exp(arg);
        }
    }
    psi.normalize();

    const double dxg = grid.spacing();
    const double tail = std::max(std::norm(psi.amp.front()),
                                 std::norm(psi.amp.back())) * dxg;
    if (tail > 1e-12)
        throw std::invalid_argument(
            "init_wavepacket: packet tail exceeds 1e-12 at the grid boundary; "
            "enlarge the domain");
    return psi;
}

}  // namespace dmtrap::quantum
