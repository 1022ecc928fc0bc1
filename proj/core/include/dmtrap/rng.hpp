#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace dmtrap {

/// Seeded random stream with an explicit Gaussian transform so that results
/// are reproducible bit-for-bit for a given seed (std::normal_distribution
/// leaves its algorithm unspecified).  Independent streams for Monte Carlo
/// workers are derived as derive(master_seed, item_index), which keeps
/// results identical for any worker count.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in (0, 1): 53-bit mantissa, never exactly 0 or 1.
    double uniform() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; pairs are cached.
    double gauss() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    static std::uint64_t mix(std::uint64_t z) {
        // splitmix64 finalizer; spreads low-entropy seeds over the state space
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    static Rng derive(std::uint64_t master_seed, std::uint64_t index) {
        return Rng(mix(master_seed) ^ mix(index + 1));
    }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace dmtrap
