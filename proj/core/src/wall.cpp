#include "dmtrap/wall.hpp"

#include <cmath>

namespace dmtrap {

double wall_position(const WallTrajectory& traj, double t) {
    if (!(t >= 0.0))
        throw std::invalid_argument("wall_position: t must be >= 0");
    switch (traj.kind) {
        case WallTrajectory::Kind::Linear:
            return traj.v * t;
        case WallTrajectory::Kind::Sqrt:
            return traj.alpha * std::sqrt(t);
        case WallTrajectory::Kind::RestThenLinear:
            return traj.v * std::max(t, traj.t_rest);
    }
    return 0.0;
}

double wall_velocity(const WallTrajectory& traj, double t) {
    if (!(t >= 0.0))
        throw std::invalid_argument("wall_velocity: t must be >= 0");
    switch (traj.kind) {
        case WallTrajectory::Kind::Linear:
            return traj.v;
        case WallTrajectory::Kind::Sqrt:
            if (t == 0.0)
                throw std::invalid_argument(
                    "wall_velocity: sqrt trajectory is singular at t = 0");
            return traj.alpha / (2.0 * std::sqrt(t));
        case WallTrajectory::Kind::RestThenLinear:
            return t <= traj.t_rest ? 0.0 : traj.v;
    }
    return 0.0;
}

double WallTrajectory::position(double t) const { return wall_position(*this, t); }
double WallTrajectory::velocity(double t) const { return wall_velocity(*this, t); }

}  // namespace dmtrap
