#include "dmtrap/ensemble/phase_ensemble.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dmtrap/classical/engine.hpp"
#include "dmtrap/parallel.hpp"
#include "dmtrap/rng.hpp"

namespace dmtrap::ensemble {

PhaseEnsemble sample_initial(std::size_t n, double x0, double dx, double v0,
                             double dv, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_initial: n must be >= 1");
    if (!(dx > 0.0)) throw std::invalid_argument("sample_initial: dx must be > 0");
    if (!(dv > 0.0)) throw std::invalid_argument("sample_initial: dv must be > 0");

    const double sx = std::sqrt(2.0) * dx;
    const double sv = std::sqrt(2.0) * dv;
    PhaseEnsemble e;
    e.x.resize(n);
    e.v.resize(n);
    e.seed = seed;
    for (std::size_t i = 0; i < n; ++i) {
        Rng rng = Rng::derive(seed, i);
        e.x[i] = x0 + sx * rng.gauss();
        e.v[i] = v0 + sv * rng.gauss();
    }
    return e;
}

PhaseEnsemble evolve_ensemble(const PhaseEnsemble& e, const SchemeConfig& cfg,
                              unsigned n_threads) {
    if (e.t != 0.0)
        throw std::invalid_argument("evolve_ensemble: ensemble must start at t = 0");
    PhaseEnsemble out;
    const std::size_t n = e.size();
    out.x.resize(n);
    out.v.resize(n);
    out.trapped.resize(n);
    out.t = cfg.total_time;
    out.seed = e.seed;

    parallel_for(
        n,
        [&](std::size_t i) {
            classical::ClassicalState init;
            init.x = e.x[i];
            init.v = e.v[i];
            try {
                const auto res = classical::simulate(init, cfg);
                out.x[i] = res.final_state.x;
                out.v[i] = res.final_state.v;
                out.trapped[i] = res.final_state.inside_trap ? 1 : 0;
            } catch (const std::runtime_error& err) {
                throw std::runtime_error("evolve_ensemble: sample " +
                                         std::to_string(i) + ": " + err.what());
            }
        },
        n_threads);
    return out;
}

Histogram1D histogram(const PhaseEnsemble& e, Axis axis,
                      std::span<const double> edges) {
    return bin_samples(axis == Axis::X ? e.x : e.v, edges);
}

namespace {

EnsembleSummary summarize(const std::vector<double>& xs,
                          const std::vector<double>& vs, double trapped_frac) {
    EnsembleSummary s;
    const double n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        s.mean_x += xs[i];
        s.mean_v += vs[i];
    }
    s.mean_x /= n;
    s.mean_v /= n;
    double vx = 0.0, vv = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        vx += (xs[i] - s.mean_x) * (xs[i] - s.mean_x);
        vv += (vs[i] - s.mean_v) * (vs[i] - s.mean_v);
    }
    s.std_x = std::sqrt(vx / n);
    s.std_v = std::sqrt(vv / n);
    s.trapped_fraction = trapped_frac;
    return s;
}

}  // namespace

EnsembleSummary ensemble_summary(const PhaseEnsemble& e) {
    if (e.size() == 0) throw std::invalid_argument("ensemble_summary: empty ensemble");
    double trapped = 0.0;
    if (!e.trapped.empty())
        for (const auto f : e.trapped) trapped += f ? 1.0 : 0.0;
    return summarize(e.x, e.v, trapped / static_cast<double>(e.size()));
}

EnsembleSummary trapped_summary(const PhaseEnsemble& e) {
    if (e.trapped.empty())
        throw std::invalid_argument("trapped_summary: ensemble has no trap flags");
    std::vector<double> xs, vs;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e.trapped[i]) {
            xs.push_back(e.x[i]);
            vs.push_back(e.v[i]);
        }
    }
    if (xs.empty()) throw std::invalid_argument("trapped_summary: no trapped samples");
    return summarize(xs, vs, static_cast<double>(xs.size()) /
                                 static_cast<double>(e.size()));
}

}  // namespace dmtrap::ensemble
