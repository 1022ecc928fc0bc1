#pragma once

#include <span>
#include <vector>

namespace dmtrap::ensemble {

/// Normalized binned distribution.  mass[i] is the probability in
/// [edges[i], edges[i+1]); samples outside the edge range land in the
/// underflow/overflow buckets, so total mass + underflow + overflow = 1.
struct Histogram1D {
    std::vector<double> edges;
    std::vector<double> mass;
    double underflow = 0.0;
    double overflow = 0.0;

    std::size_t bins() const { return mass.size(); }
    double bin_center(std::size_t i) const {
        return 0.5 * (edges[i] + edges[i + 1]);
    }
};

std::vector<double> uniform_edges(double lo, double hi, std::size_t n_bins);

/// Bins `values` (optionally weighted) into a normalized histogram.
/// Edges must be strictly increasing with at least two entries.
Histogram1D bin_samples(std::span<const double> values,
                        std::span<const double> edges);
Histogram1D bin_weighted(std::span<const double> values,
                         std::span<const double> weights,
                         std::span<const double> edges);

/// Total-variation style distance: sum_i |a_i - b_i| over bins plus the
/// absolute under/overflow differences.  Lives in [0, 2]; requires
/// identical edges.
double l1_distance(const Histogram1D& a, const Histogram1D& b);

/// Kolmogorov-Smirnov distance of the binned cumulative distributions.
double ks_distance(const Histogram1D& a, const Histogram1D& b);

}  // namespace dmtrap::ensemble
