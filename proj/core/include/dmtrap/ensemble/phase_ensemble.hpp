#pragma once

#include <cstdint>
#include <vector>

#include "dmtrap/ensemble/histogram.hpp"
#include "dmtrap/scheme_config.hpp"

namespace dmtrap::ensemble {

/// Weighted-equal sample cloud of the phase-space density rho(t, x, v).
/// After evolve_ensemble the `trapped` flags record which samples crossed
/// the diode (empty before evolution).  Regenerating with the same seed
/// reproduces the samples bit-identically, independent of worker count.
struct PhaseEnsemble {
    std::vector<double> x;
    std::vector<double> v;
    std::vector<std::uint8_t> trapped;
    double t = 0.0;
    std::uint64_t seed = 0;

    std::size_t size() const { return x.size(); }
};

/// Independent bivariate Gaussian draw with mean (x0, v0) and standard
/// deviations (sqrt(2)*dx, sqrt(2)*dv) — the widths implied by the initial
/// density exp(-[((x-x0)/2dx)^2 + ((v-v0)/2dv)^2]).  Deterministic per seed
/// with per-sample derived streams.
PhaseEnsemble sample_initial(std::size_t n, double x0, double dx, double v0,
                             double dv, std::uint64_t seed);

/// Propagates every sample independently through the classical engine to
/// t = cfg.total_time.  An engine abort is rethrown with the offending
/// sample index.  `n_threads` 0 means hardware concurrency.
PhaseEnsemble evolve_ensemble(const PhaseEnsemble& e, const SchemeConfig& cfg,
                              unsigned n_threads = 0);

enum class Axis { X, V };

Histogram1D histogram(const PhaseEnsemble& e, Axis axis,
                      std::span<const double> edges);

struct EnsembleSummary {
    double mean_x = 0.0, std_x = 0.0;
    double mean_v = 0.0, std_v = 0.0;
    double trapped_fraction = 0.0;
};

EnsembleSummary ensemble_summary(const PhaseEnsemble& e);

/// Summary restricted to trapped samples; throws if none are trapped.
EnsembleSummary trapped_summary(const PhaseEnsemble& e);

}  // namespace dmtrap::ensemble
