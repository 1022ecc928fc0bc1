#include "dmtrap/classical/engine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dmtrap::classical {

namespace {

// Minimum approach speed for a collision to fire, in d/T.  Breaks the
// grazing tie when a particle runs exactly at wall speed.
constexpr double kApproachEps = 1e-12;

struct FreeFlight {
    double t0, x0, v;
};

// Side the particle approaches the wall from.
enum class Side { Left, Right };

bool approach_ok(double v_particle, double v_wall, Side side) {
    const double approach =
        side == Side::Left ? v_particle - v_wall : v_wall - v_particle;
    return approach > kApproachEps;
}

// Intersection of the free-flight line with the linear wall piece
// w(t) = a + b*t, restricted to t in (lo, hi].  Returns the hit time or NaN.
double solve_linear_piece(const FreeFlight& f, double a, double b, double lo,
                          double hi, Side side) {
    const double den = f.v - b;
    if (!approach_ok(f.v, b, side)) return std::nan("");
    const double t = (a - f.x0 + f.v * f.t0) / den;
    if (t > lo && t <= hi && t > f.t0) return t;
    return std::nan("");
}

// Intersection with a sqrt wall alpha*sqrt(t), solved through the quadratic
// v*u^2 - alpha*u + (x0 - v*t0) = 0 in u = sqrt(t).  The smallest admissible
// root wins; both roots are physical (a decelerating wall can be met twice).
double solve_sqrt(const FreeFlight& f, double alpha, double t_max, Side side) {
    const double c = f.x0 - f.v * f.t0;
    double roots[2];
    int n_roots = 0;
    if (f.v == 0.0) {
        if (alpha > 0.0 && c > 0.0) roots[n_roots++] = c / alpha;
    } else {
        const double disc = alpha * alpha - 4.0 * f.v * c;
        if (disc >= 0.0) {
            const double sq = std::sqrt(disc);
            // stable quadratic: q avoids cancellation for either sign of v
            const double q = (alpha >= 0.0) ? 0.5 * (alpha + sq) : 0.5 * (alpha - sq);
            if (q != 0.0) {
                roots[n_roots++] = q / f.v;
                roots[n_roots++] = c / q;
            } else {
                roots[n_roots++] = 0.0;
            }
        }
    }
    double best = std::nan("");
    for (int i = 0; i < n_roots; ++i) {
        const double u = roots[i];
        if (!(u > 0.0)) continue;
        const double t = u * u;
        if (!(t > f.t0) || !(t <= t_max)) continue;
        const double v_wall = alpha / (2.0 * u);
        if (!approach_ok(f.v, v_wall, side)) continue;
        if (std::isnan(best) || t < best) best = t;
    }
    return best;
}

// Earliest hit of the free-flight line with `wall` in (f.t0, t_max], or NaN.
double solve_wall_hit(const FreeFlight& f, const WallTrajectory& wall,
                      double t_max, Side side) {
    switch (wall.kind) {
        case WallTrajectory::Kind::Linear:
            return solve_linear_piece(f, 0.0, wall.v, f.t0, t_max, side);
        case WallTrajectory::Kind::Sqrt:
            return solve_sqrt(f, wall.alpha, t_max, side);
        case WallTrajectory::Kind::RestThenLinear: {
            if (f.t0 < wall.t_rest) {
                const double t_rest_hit = solve_linear_piece(
                    f, wall.v * wall.t_rest, 0.0, f.t0,
                    std::min(wall.t_rest, t_max), side);
                if (!std::isnan(t_rest_hit)) return t_rest_hit;
            }
            return solve_linear_piece(f, 0.0, wall.v,
                                      std::max(f.t0, wall.t_rest), t_max, side);
        }
    }
    return std::nan("");
}

std::optional<CollisionEvent> first_reflection(const ClassicalState& state,
                                               const SchemeConfig& cfg,
                                               double t_from, double x_from) {
    const double T = cfg.total_time;
    const FreeFlight f{t_from, x_from, state.v};
    const double t_mirror = solve_wall_hit(f, cfg.mirror, T, Side::Left);
    const double t_diode = solve_wall_hit(f, cfg.diode, T, Side::Right);

    Wall wall = Wall::None;
    double t_hit = std::nan("");
    if (!std::isnan(t_mirror)) {
        wall = Wall::Mirror;
        t_hit = t_mirror;
    }
    if (!std::isnan(t_diode) && (std::isnan(t_hit) || t_diode < t_hit)) {
        wall = Wall::Diode;
        t_hit = t_diode;
    }
    if (std::isnan(t_hit) || !(t_hit < T)) return std::nullopt;

    CollisionEvent ev;
    ev.n = state.n_collisions + 1;
    ev.t = t_hit;
    ev.x = x_from + state.v * (t_hit - t_from);
    ev.wall = wall;
    ev.v_before = state.v;
    const auto& traj = wall == Wall::Mirror ? cfg.mirror : cfg.diode;
    ev.v_after = reflect(state.v, wall_velocity(traj, t_hit));
    return ev;
}

}  // namespace

std::optional<CollisionEvent> next_collision(const ClassicalState& state,
                                             const SchemeConfig& cfg) {
    const double T = cfg.total_time;
    if (!(state.t < T)) return std::nullopt;

    if (state.inside_trap)
        return first_reflection(state, cfg, state.t, state.x);

    // Left of the diode: the diode is transparent from this side.  Find the
    // crossing (a pass-through, not an event) and search onward from there.
    if (state.x > wall_position(cfg.mirror, state.t)) return std::nullopt;
    const FreeFlight f{state.t, state.x, state.v};
    const double t_cross = solve_wall_hit(f, cfg.diode, T, Side::Left);
    if (std::isnan(t_cross)) return std::nullopt;
    const double x_cross = state.x + state.v * (t_cross - state.t);
    return first_reflection(state, cfg, t_cross, x_cross);
}

SimulationResult simulate(const ClassicalState& initial, const SchemeConfig& cfg,
                          std::int64_t event_cap) {
    SimulationResult res;
    ClassicalState s = initial;

    const double xd0 = wall_position(cfg.diode, s.t);
    const double xm0 = wall_position(cfg.mirror, s.t);
    if (!s.inside_trap && s.x >= xd0 && s.x <= xm0) s.inside_trap = true;

    while (auto ev = next_collision(s, cfg)) {
        res.events.push_back(*ev);
        s.t = ev->t;
        s.x = ev->x;
        s.v = ev->v_after;
        s.n_collisions = ev->n;
        s.inside_trap = true;
        s.last_wall = ev->wall;
        if (static_cast<std::int64_t>(res.events.size()) > event_cap)
            throw std::runtime_error(
                "simulate: collision count exceeded cap (" +
                std::to_string(event_cap) +
                ") at t = " + std::to_string(s.t) +
                "; configuration is degenerate");
    }

    // A particle that crosses the diode without ever reflecting (too slow to
    // catch the mirror) is trapped as well.
    if (!s.inside_trap && s.x <= wall_position(cfg.mirror, s.t)) {
        const FreeFlight f{s.t, s.x, s.v};
        const double t_cross = solve_wall_hit(f, cfg.diode, cfg.total_time, Side::Left);
        if (!std::isnan(t_cross)) s.inside_trap = true;
    }

    s.x += s.v * (cfg.total_time - s.t);
    s.t = cfg.total_time;
    res.final_state = s;
    return res;
}

}  // namespace dmtrap::classical
