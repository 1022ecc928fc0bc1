#pragma once

#include <cstddef>
#include <stdexcept>

namespace dmtrap::quantum {

/// Uniform spatial grid with the standard discrete-transform momentum
/// ordering: wavenumber(j) = 2*pi*j / (N*dx) for j < N/2 and
/// 2*pi*(j - N) / (N*dx) above, spanning (-pi/dx, pi/dx].
struct SpatialGrid {
    double x_min = -1.0;
    double x_max = 1.0;
    std::size_t n = 0;

    SpatialGrid() = default;
    SpatialGrid(double lo, double hi, std::size_t points)
        : x_min(lo), x_max(hi), n(points) {
        if (!(x_max > x_min))
            throw std::invalid_argument("grid: x_max must exceed x_min");
        if (n < 2 || (n & (n - 1)) != 0)
            throw std::invalid_argument("grid: N must be a power of two >= 2");
    }

    double spacing() const { return (x_max - x_min) / static_cast<double>(n); }
    double point(std::size_t i) const {
        return x_min + spacing() * static_cast<double>(i);
    }
    double wavenumber(std::size_t j) const {
        const double dk = 2.0 * 3.14159265358979323846 / (x_max - x_min);
        const auto half = n / 2;
        return j < half ? dk * static_cast<double>(j)
                        : dk * (static_cast<double>(j) - static_cast<double>(n));
    }

    bool operator==(const SpatialGrid&) const = default;
};

}  // namespace dmtrap::quantum
