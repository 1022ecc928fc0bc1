#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dmtrap/scheme_config.hpp"

namespace dmtrap::classical {

enum class Wall { None, Diode, Mirror };

/// Phase-space point of one classical particle.  inside_trap flips to true
/// once the particle has crossed the diode from the left; from then on
/// x_d(t) <= x <= x_m(t) holds at every event time.  In the linear scheme
/// the collision count parity matches last_wall (odd = mirror, even > 0 =
/// diode) for a particle that entered through the diode.
struct ClassicalState {
    double t = 0.0;
    double x = 0.0;
    double v = 0.0;
    int n_collisions = 0;
    bool inside_trap = false;
    Wall last_wall = Wall::None;
};

/// One elastic wall reflection.  v_after = 2 * wall_velocity(t) - v_before.
struct CollisionEvent {
    int n = 0;  // 1-based collision index
    double t = 0.0;
    double x = 0.0;
    Wall wall = Wall::None;
    double v_before = 0.0;
    double v_after = 0.0;
};

/// Elastic reflection off a wall moving at v_wall.
inline double reflect(double v_p, double v_wall) { return 2.0 * v_wall - v_p; }

/// Earliest reflection event strictly after state.t and before
/// cfg.total_time, or nullopt when the particle meets no wall in time.
/// A crossing of the diode from the left is a pass-through, not an event;
/// it is resolved internally before the first reflection is searched.
/// Linear branches are solved by one division, sqrt branches via the
/// quadratic in u = sqrt(t').  Collisions are admitted only with approach
/// speed above 1e-12 d/T, so co-moving (grazing) contacts never fire.
std::optional<CollisionEvent> next_collision(const ClassicalState& state,
                                             const SchemeConfig& cfg);

struct SimulationResult {
    std::vector<CollisionEvent> events;
    ClassicalState final_state;
};

/// Runs the event loop from `initial` until no collision happens before
/// cfg.total_time, then advances the state to t = total_time by free
/// flight.  Exceeding `event_cap` collisions aborts with a diagnostic
/// (degenerate configuration).
SimulationResult simulate(const ClassicalState& initial, const SchemeConfig& cfg,
                          std::int64_t event_cap = 1'000'000);

}  // namespace dmtrap::classical
