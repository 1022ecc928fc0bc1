#include "dmtrap/ensemble/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dmtrap::ensemble {

namespace {

void check_edges(std::span<const double> edges) {
    if (edges.size() < 2)
        throw std::invalid_argument("histogram: need at least 2 edges");
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (!(edges[i] > edges[i - 1]))
            throw std::invalid_argument("histogram: edges must be strictly increasing");
}

std::size_t find_bin(std::span<const double> edges, double v) {
    // index of bin [e_i, e_{i+1}) containing v; edges.size()-1 bins
    const auto it = std::upper_bound(edges.begin(), edges.end(), v);
    return static_cast<std::size_t>(it - edges.begin()) - 1;
}

}  // namespace

std::vector<double> uniform_edges(double lo, double hi, std::size_t n_bins) {
    if (!(hi > lo) || n_bins == 0)
        throw std::invalid_argument("uniform_edges: need hi > lo and n_bins > 0");
    std::vector<double> e(n_bins + 1);
    for (std::size_t i = 0; i <= n_bins; ++i)
        e[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n_bins);
    return e;
}

Histogram1D bin_weighted(std::span<const double> values,
                         std::span<const double> weights,
                         std::span<const double> edges) {
    check_edges(edges);
    if (values.size() != weights.size())
        throw std::invalid_argument("histogram: values/weights size mismatch");
    Histogram1D h;
    h.edges.assign(edges.begin(), edges.end());
    h.mass.assign(edges.size() - 1, 0.0);

    double total = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) total += weights[i];
    if (!(total > 0.0))
        throw std::invalid_argument("histogram: total weight must be positive");

    for (std::size_t i = 0; i < values.size(); ++i) {
        const double v = values[i];
        const double w = weights[i] / total;
        if (v < edges.front()) {
            h.underflow += w;
        } else if (v >= edges.back()) {
            h.overflow += w;
        } else {
            h.mass[find_bin(edges, v)] += w;
        }
    }
    return h;
}

Histogram1D bin_samples(std::span<const double> values,
                        std::span<const double> edges) {
    check_edges(edges);
    if (values.empty())
        throw std::invalid_argument("histogram: no samples");
    Histogram1D h;
    h.edges.assign(edges.begin(), edges.end());
    h.mass.assign(edges.size() - 1, 0.0);
    const double w = 1.0 / static_cast<double>(values.size());
    for (const double v : values) {
        if (v < edges.front()) {
            h.underflow += w;
        } else if (v >= edges.back()) {
            h.overflow += w;
        } else {
            h.mass[find_bin(edges, v)] += w;
        }
    }
    return h;
}

double l1_distance(const Histogram1D& a, const Histogram1D& b) {
    if (a.edges != b.edges)
        throw std::invalid_argument("l1_distance: histograms have different edges");
    double s = std::abs(a.underflow - b.underflow) + std::abs(a.overflow - b.overflow);
    for (std::size_t i = 0; i < a.mass.size(); ++i)
        s += std::abs(a.mass[i] - b.mass[i]);
    return s;
}

double ks_distance(const Histogram1D& a, const Histogram1D& b) {
    if (a.edges != b.edges)
        throw std::invalid_argument("ks_distance: histograms have different edges");
    double ca = a.underflow, cb = b.underflow;
    double d = std::abs(ca - cb);
    for (std::size_t i = 0; i < a.mass.size(); ++i) {
        ca += a.mass[i];
        cb += b.mass[i];
        d = std::max(d, std::abs(ca - cb));
    }
    return d;
}

}  // namespace dmtrap::ensemble
