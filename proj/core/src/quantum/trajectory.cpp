#include "dmtrap/quantum/trajectory.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dmtrap/parallel.hpp"
#include "dmtrap/rng.hpp"

namespace dmtrap::quantum {

namespace {

constexpr double kTimeSlack = 1e-12;

// Fraction of the (normalized) probability sitting on the outermost
// boundary points; the transform wraps periodically, so mass arriving here
// would alias to the other side of the box.
double boundary_mass(const WaveFunction& psi, double norm_sq) {
    constexpr std::size_t kGuard = 8;
    const std::size_t n = psi.amp.size();
    const std::size_t g = std::min(kGuard, n / 4);
    double m = 0.0;
    for (std::size_t i = 0; i < g; ++i)
        m += std::norm(psi.amp[i]) + std::norm(psi.amp[n - 1 - i]);
    return m * psi.grid.spacing() / norm_sq;
}

// Steps psi to exactly t_end under the current level's Hamiltonian,
// splitting the interval into full dt steps plus one remainder step.
void evolve_plain(WaveFunction& psi, const QuantumRunConfig& cfg,
                  StrangPropagator& prop, double t_end) {
    const double dt = prop.dt();
    while (psi.t < t_end - kTimeSlack) {
        const double remaining = t_end - psi.t;
        const auto n_full = static_cast<std::size_t>(
            std::floor(remaining / dt + kTimeSlack));
        if (n_full == 0) {
            prop.set_dt(remaining);
            prop.step(psi, cfg.scheme, psi.t);
            prop.set_dt(dt);
            break;
        }
        std::size_t since_check = 0;
        prop.evolve(psi, cfg.scheme, psi.t, n_full,
                    [&](std::size_t, double n2) {
                        if (++since_check >= cfg.monitor_stride) {
                            since_check = 0;
                            if (boundary_mass(psi, n2) > cfg.boundary_mass_limit)
                                throw std::runtime_error(
                                    "quantum run: boundary-adjacent probability "
                                    "exceeds limit; enlarge the grid domain");
                        }
                        return true;
                    });
    }
}

}  // namespace

double QuantumRunConfig::omega0() const {
    return std::sqrt(2.0 * gamma * scheme.pot_quench.amplitude /
                     scheme.units.hbar);
}

QuantumRunConfig validate_quantum_config(const QuantumRunConfig& cfg) {
    validate_config(cfg.scheme);
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("quantum: dt must be > 0");
    if (cfg.n_traj < 1) throw std::invalid_argument("quantum: n_traj must be >= 1");
    if (!(cfg.packet.dx > 0.0) || !(cfg.packet.dv > 0.0))
        throw std::invalid_argument("quantum: packet widths must be > 0");
    const double hbar = cfg.scheme.units.hbar;
    const double m = cfg.scheme.units.mass;
    const double limit = M_PI * hbar / (m * cfg.v_max());
    if (!(cfg.grid.spacing() < limit))
        throw std::invalid_argument(
            "quantum: grid too coarse for the configured velocities; need "
            "spacing < " + std::to_string(limit) + " but have " +
            std::to_string(cfg.grid.spacing()));
    if (cfg.unraveling == UnravelingKind::ThreeLevel && !(cfg.gamma > 0.0))
        throw std::invalid_argument("quantum: three-level unraveling needs gamma > 0");
    return cfg;
}

std::optional<double> evolve_until_jump(WaveFunction& psi,
                                        const QuantumRunConfig& cfg, double r,
                                        StrangPropagator& prop) {
    if (psi.level != Level::PreJump)
        throw std::invalid_argument("evolve_until_jump: state must be pre-jump");
    const double T = cfg.scheme.total_time;
    const double dt = cfg.effective_dt_absorb();
    prop.set_dt(dt);

    bool jumped = false;
    double prev_norm = psi.norm_sq();
    std::size_t since_check = 0;

    const auto monitor = [&](std::size_t, double n2) {
        const double loss = (prev_norm - n2) / prev_norm;
        if (loss > cfg.max_step_norm_loss)
            throw std::runtime_error(
                "quantum run: norm loss per step " + std::to_string(loss) +
                " exceeds " + std::to_string(cfg.max_step_norm_loss) +
                "; reduce dt_absorb");
        prev_norm = n2;
        if (++since_check >= cfg.monitor_stride) {
            since_check = 0;
            if (boundary_mass(psi, n2) > cfg.boundary_mass_limit)
                throw std::runtime_error(
                    "quantum run: boundary-adjacent probability exceeds limit; "
                    "enlarge the grid domain");
        }
        if (n2 <= r) {
            jumped = true;
            return false;
        }
        return true;
    };

    while (psi.t < T - kTimeSlack && !jumped) {
        const double remaining = T - psi.t;
        auto n_full = static_cast<std::size_t>(
            std::floor(remaining / dt + kTimeSlack));
        if (n_full == 0) {
            prop.set_dt(remaining);
            prop.evolve(psi, cfg.scheme, psi.t, 1, monitor);
            prop.set_dt(dt);
            break;
        }
        prop.evolve(psi, cfg.scheme, psi.t, n_full, monitor);
    }
    if (jumped) return psi.t;
    return std::nullopt;
}

void apply_jump(WaveFunction& psi, const QuantumRunConfig& cfg, double t_jump) {
    if (psi.level != Level::PreJump)
        throw std::invalid_argument("apply_jump: state must be pre-jump");
    if (cfg.jump_mode == JumpMode::ApplyOperator) {
        const double xc = wall_position(cfg.scheme.quench, t_jump);
        for (std::size_t i = 0; i < psi.amp.size(); ++i) {
            const double w =
                potential_value(cfg.scheme.pot_quench, psi.grid.point(i) - xc);
            psi.amp[i] *= std::sqrt(w);
        }
    }
    const double n2 = psi.norm_sq();
    if (!(n2 > 0.0))
        throw std::runtime_error(
            "apply_jump: state has no overlap with the quench profile "
            "(zero post-jump norm)");
    const double s = 1.0 / std::sqrt(n2);
    for (auto& a : psi.amp) a *= s;
    psi.level = Level::PostJump;
    psi.t = t_jump;
}

TrajectoryRecord run_trajectory(const QuantumRunConfig& cfg, std::uint64_t seed) {
    const auto& units = cfg.scheme.units;
    TrajectoryRecord rec;
    rec.seed = seed;

    WaveFunction psi = init_wavepacket(cfg.grid, cfg.packet.x0, cfg.packet.dx,
                                       cfg.packet.v0, cfg.packet.dv, units.mass,
                                       cfg.init_mode, units.hbar);
    Rng rng(seed);
    const double r = rng.uniform();

    StrangPropagator prop(cfg.grid, units.mass, cfg.effective_dt_absorb(),
                          units.hbar);
    const auto t_jump = evolve_until_jump(psi, cfg, r, prop);

    if (t_jump) {
        rec.jumped = true;
        rec.t_jump = *t_jump;
        apply_jump(psi, cfg, *t_jump);
        rec.jump_density = psi.position_density();
        prop.set_dt(cfg.dt);
        evolve_plain(psi, cfg, prop, cfg.scheme.total_time);
    } else {
        psi.normalize();  // surviving conditional state
    }
    rec.final_state = std::move(psi);
    return rec;
}

std::uint64_t derive_trajectory_seed(std::uint64_t master, std::uint64_t index) {
    return Rng::mix(master) ^ Rng::mix(index + 0x51ED2700);
}

QuantumEnsembleResult run_quantum_ensemble(const QuantumRunConfig& cfg,
                                           std::span<const double> edges_x,
                                           std::span<const double> edges_v,
                                           unsigned n_threads) {
    validate_quantum_config(cfg);
    const auto n = static_cast<std::size_t>(cfg.n_traj);
    const double hbar = cfg.scheme.units.hbar;
    const double mass = cfg.scheme.units.mass;

    std::vector<ensemble::Histogram1D> pos(n), vel(n);
    std::vector<std::vector<double>> dens(n);
    QuantumEnsembleResult res;
    res.log.resize(n);

    std::vector<double> points(cfg.grid.n), velocities(cfg.grid.n);
    for (std::size_t i = 0; i < cfg.grid.n; ++i) {
        points[i] = cfg.grid.point(i);
        velocities[i] = hbar * cfg.grid.wavenumber(i) / mass;
    }

    parallel_for(
        n,
        [&](std::size_t i) {
            const auto seed = derive_trajectory_seed(cfg.seed, i);
            try {
                auto rec = run_trajectory(cfg, seed);
                res.log[i] = {seed, rec.jumped, rec.t_jump};
                auto density = rec.final_state.position_density();
                const double dx = cfg.grid.spacing();
                for (auto& d : density) d *= dx;
                pos[i] = ensemble::bin_weighted(points, density, edges_x);
                const auto pm = rec.final_state.momentum_mass();
                vel[i] = ensemble::bin_weighted(velocities, pm, edges_v);
                dens[i] = std::move(density);
            } catch (const std::runtime_error& err) {
                throw std::runtime_error("trajectory " + std::to_string(i) +
                                         " (seed " + std::to_string(seed) +
                                         "): " + err.what());
            }
        },
        n_threads);

    res.position = pos[0];
    res.velocity = vel[0];
    res.grid_density = dens[0];
    const double w = 1.0 / static_cast<double>(n);
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t b = 0; b < res.position.mass.size(); ++b)
            res.position.mass[b] += pos[i].mass[b];
        res.position.underflow += pos[i].underflow;
        res.position.overflow += pos[i].overflow;
        for (std::size_t b = 0; b < res.velocity.mass.size(); ++b)
            res.velocity.mass[b] += vel[i].mass[b];
        res.velocity.underflow += vel[i].underflow;
        res.velocity.overflow += vel[i].overflow;
        for (std::size_t g = 0; g < res.grid_density.size(); ++g)
            res.grid_density[g] += dens[i][g];
    }
    for (auto& m : res.position.mass) m *= w;
    res.position.underflow *= w;
    res.position.overflow *= w;
    for (auto& m : res.velocity.mass) m *= w;
    res.velocity.underflow *= w;
    res.velocity.overflow *= w;
    for (auto& g : res.grid_density) g *= w;
    return res;
}

}  // namespace dmtrap::quantum
