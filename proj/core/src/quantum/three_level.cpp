#include "dmtrap/quantum/three_level.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "dmtrap/parallel.hpp"
#include "dmtrap/quantum/fft.hpp"
#include "dmtrap/rng.hpp"

namespace dmtrap::quantum {

namespace {

using cdouble = std::complex<double>;

struct Spinor {
    SpatialGrid grid;
    std::array<std::vector<cdouble>, 3> c;
    double t = 0.0;

    double norm_sq() const {
        double s = 0.0;
        for (const auto& comp : c)
            for (const auto& a : comp) s += std::norm(a);
        return s * grid.spacing();
    }
};

// exp(-i M dt) for the non-Hermitian 2x2 block [[a, b], [b, d]] acting on
// (psi_1, psi_3); a = V_m(x), b = hbar Omega/2, d = -i hbar gamma / 2.
struct Block2x2 {
    cdouble m11, m13, m33;
};

Block2x2 coupling_exponential(double a, double b, cdouble d, double dt) {
    const cdouble mean = 0.5 * (a + d);
    const cdouble delta = 0.5 * (a - d);
    const cdouble rad = std::sqrt(delta * delta + b * b);
    const cdouble z = rad * dt;
    const cdouble cosz = std::cos(z);
    cdouble sinc;  // sin(z)/z
    if (std::abs(z) < 1e-8) {
        sinc = 1.0 - z * z / 6.0;
    } else {
        sinc = std::sin(z) / z;
    }
    const cdouble phase = std::exp(cdouble(0.0, -1.0) * mean * dt);
    const cdouble i_dt(0.0, -dt);
    Block2x2 e;
    e.m11 = phase * (cosz + i_dt * sinc * delta);          // note (M-mean)_11 = delta
    e.m33 = phase * (cosz - i_dt * sinc * delta);          // (M-mean)_33 = -delta
    e.m13 = phase * (i_dt * sinc * b);
    return e;
}

class ConditionalPropagator {
  public:
    ConditionalPropagator(const QuantumRunConfig& cfg)
        : cfg_(cfg), grid_(cfg.grid), fft_(shared_fft(grid_.n)),
          mass_(cfg.scheme.units.mass), hbar_(cfg.scheme.units.hbar),
          gamma_(cfg.gamma), omega0_(cfg.omega0()) {
        set_dt(cfg.effective_dt_absorb());
    }

    void set_dt(double dt) {
        dt_ = dt;
        cache_valid_ = false;
        kin_half_.resize(grid_.n);
        for (std::size_t j = 0; j < grid_.n; ++j) {
            const double k = grid_.wavenumber(j);
            kin_half_[j] = std::polar(1.0, -hbar_ * k * k / (2.0 * mass_) * dt_ * 0.5);
        }
    }

    double dt() const { return dt_; }

    // One kinetic-potential-kinetic step of the conditional three-level
    // Hamiltonian at time t.
    void step(Spinor& s, double t) {
        kinetic_half(s);
        potential(s, t + 0.5 * dt_);
        kinetic_half(s);
        s.t = t + dt_;
    }

  private:
    void kinetic_half(Spinor& s) {
        for (auto& comp : s.c) {
            fft_->forward(comp.data());
            for (std::size_t j = 0; j < comp.size(); ++j) comp[j] *= kin_half_[j];
            fft_->inverse(comp.data());
        }
    }

    void potential(Spinor& s, double t_mid) {
        const auto& sc = cfg_.scheme;
        const double xm = wall_position(sc.mirror, t_mid);
        const double xd = wall_position(sc.diode, t_mid);
        const double xc = wall_position(sc.quench, t_mid);
        if (!cache_valid_ || xm != cache_xm_ || xd != cache_xd_ ||
            xc != cache_xc_) {
            rebuild_factors(xm, xd, xc);
        }
        for (std::size_t i = 0; i < grid_.n; ++i) {
            const cdouble a1 = s.c[0][i], a3 = s.c[2][i];
            s.c[0][i] = f11_[i] * a1 + f13_[i] * a3;
            s.c[2][i] = f13_[i] * a1 + f33_[i] * a3;
            s.c[1][i] *= f2_[i];
        }
    }

    void rebuild_factors(double xm, double xd, double xc) {
        const auto& sc = cfg_.scheme;
        const cdouble d(0.0, -0.5 * hbar_ * gamma_);
        const double v0c = sc.pot_quench.amplitude;
        f11_.resize(grid_.n);
        f13_.resize(grid_.n);
        f33_.resize(grid_.n);
        f2_.resize(grid_.n);
        for (std::size_t i = 0; i < grid_.n; ++i) {
            const double x = grid_.point(i);
            const double vm = potential_value(sc.pot_mirror, x - xm);
            const double vd = potential_value(sc.pot_diode, x - xd);
            // Omega_p(x) = omega0 * exp(-(x-xc)^2 / (2 sigma_c^2)), so that
            // hbar Omega_p^2 / (2 gamma) reproduces the quench profile.
            const double om =
                v0c > 0.0 ? omega0_ * std::sqrt(potential_value(sc.pot_quench,
                                                                x - xc) / v0c)
                          : 0.0;
            const auto e =
                coupling_exponential(vm, 0.5 * hbar_ * om, d, dt_ / hbar_);
            f11_[i] = e.m11;
            f13_[i] = e.m13;
            f33_[i] = e.m33;
            f2_[i] = std::polar(1.0, -(vd + vm) * dt_ / hbar_);
        }
        cache_xm_ = xm;
        cache_xd_ = xd;
        cache_xc_ = xc;
        cache_valid_ = true;
    }

    const QuantumRunConfig& cfg_;
    SpatialGrid grid_;
    std::shared_ptr<const Fft> fft_;
    double mass_, hbar_, gamma_, omega0_;
    double dt_ = 0.0;
    std::vector<cdouble> kin_half_;
    bool cache_valid_ = false;
    double cache_xm_ = 0.0, cache_xd_ = 0.0, cache_xc_ = 0.0;
    std::vector<cdouble> f11_, f13_, f33_, f2_;
};

}  // namespace

ThreeLevelRecord three_level_trajectory(const QuantumRunConfig& cfg,
                                        std::uint64_t seed) {
    if (cfg.grid.n > 256)
        throw std::invalid_argument(
            "three_level_trajectory: grid capped at N = 256 (cost guard)");
    if (cfg.unraveling != UnravelingKind::ThreeLevel)
        throw std::invalid_argument(
            "three_level_trajectory: config must select the three-level unraveling");
    validate_quantum_config(cfg);

    const auto& units = cfg.scheme.units;
    const double T = cfg.scheme.total_time;

    WaveFunction psi0 = init_wavepacket(cfg.grid, cfg.packet.x0, cfg.packet.dx,
                                        cfg.packet.v0, cfg.packet.dv, units.mass,
                                        cfg.init_mode, units.hbar);
    Spinor s;
    s.grid = cfg.grid;
    s.c[0] = psi0.amp;
    s.c[1].assign(cfg.grid.n, cdouble(0.0));
    s.c[2].assign(cfg.grid.n, cdouble(0.0));

    Rng rng(seed);
    const double r = rng.uniform();

    ThreeLevelRecord rec;
    rec.seed = seed;

    ConditionalPropagator prop(cfg);
    const double dt = prop.dt();
    bool jumped = false;
    while (s.t < T - 1e-12) {
        const double remaining = T - s.t;
        if (remaining < dt * (1.0 - 1e-9)) {
            prop.set_dt(remaining);
            prop.step(s, s.t);
            prop.set_dt(dt);
        } else {
            prop.step(s, s.t);
        }
        if (s.norm_sq() <= r) {
            jumped = true;
            break;
        }
    }

    if (jumped) {
        rec.jumped = true;
        rec.t_jump = s.t;
        // jump operator sqrt(gamma)|2><3|: level 3 profile lands in level 2
        WaveFunction post;
        post.grid = cfg.grid;
        post.amp = s.c[2];
        post.level = Level::PostJump;
        post.t = s.t;
        const double n2 = post.norm_sq();
        if (!(n2 > 0.0))
            throw std::runtime_error(
                "three_level_trajectory: jump fired with empty level-3 "
                "population");
        post.normalize();
        StrangPropagator post_prop(cfg.grid, units.mass, cfg.dt, units.hbar);
        while (post.t < T - 1e-12) {
            const double remaining = T - post.t;
            const auto n_full = static_cast<std::size_t>(
                std::floor(remaining / cfg.dt + 1e-12));
            if (n_full == 0) {
                post_prop.set_dt(remaining);
                post_prop.step(post, cfg.scheme, post.t);
                post_prop.set_dt(cfg.dt);
            } else {
                post_prop.evolve(post, cfg.scheme, post.t, n_full);
            }
        }
        s.c[0].assign(cfg.grid.n, cdouble(0.0));
        s.c[1] = post.amp;
        s.c[2].assign(cfg.grid.n, cdouble(0.0));
        s.t = post.t;
    } else {
        const double n2 = s.norm_sq();
        const double scale = 1.0 / std::sqrt(n2);
        for (auto& comp : s.c)
            for (auto& a : comp) a *= scale;
    }

    const double dx = cfg.grid.spacing();
    rec.position_density.assign(cfg.grid.n, 0.0);
    for (int l = 0; l < 3; ++l) {
        double pop = 0.0;
        for (std::size_t i = 0; i < cfg.grid.n; ++i) {
            const double m = std::norm(s.c[l][i]) * dx;
            pop += m;
            rec.position_density[i] += m;
        }
        rec.populations[l] = pop;
        rec.spinor[l] = std::move(s.c[l]);
    }
    return rec;
}

ThreeLevelEnsembleResult run_three_level_ensemble(const QuantumRunConfig& cfg,
                                                  unsigned n_threads) {
    const auto n = static_cast<std::size_t>(cfg.n_traj);
    std::vector<ThreeLevelRecord> recs(n);
    parallel_for(
        n,
        [&](std::size_t i) {
            recs[i] = three_level_trajectory(
                cfg, derive_trajectory_seed(cfg.seed, i));
        },
        n_threads);

    ThreeLevelEnsembleResult res;
    res.mean_position_density.assign(cfg.grid.n, 0.0);
    res.log.resize(n);
    const double w = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        res.log[i] = {recs[i].seed, recs[i].jumped, recs[i].t_jump};
        for (int l = 0; l < 3; ++l) res.mean_populations[l] += w * recs[i].populations[l];
        for (std::size_t g = 0; g < cfg.grid.n; ++g)
            res.mean_position_density[g] += w * recs[i].position_density[g];
    }
    return res;
}

}  // namespace dmtrap::quantum
