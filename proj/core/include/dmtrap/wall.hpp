#pragma once

#include <stdexcept>

namespace dmtrap {

/// Motion law of a wall (diode, mirror or quench center).
///
/// Three kinds are supported:
///   Linear          x(t) = v * t
///   Sqrt            x(t) = alpha * sqrt(t)
///   RestThenLinear  x(t) = v * t_rest for t <= t_rest, v * t afterwards
///
/// Position is continuous in t for every kind.  The Sqrt velocity
/// alpha / (2 sqrt(t)) diverges at t = 0 and must not be queried there.
struct WallTrajectory {
    enum class Kind { Linear, Sqrt, RestThenLinear };

    Kind kind = Kind::Linear;
    double v = 0.0;       // Linear / RestThenLinear speed
    double alpha = 0.0;   // Sqrt coefficient, length per sqrt(time)
    double t_rest = 0.0;  // RestThenLinear switch time

    static WallTrajectory linear(double v) {
        WallTrajectory w;
        w.kind = Kind::Linear;
        w.v = v;
        return w;
    }

    static WallTrajectory sqrt_profile(double alpha) {
        WallTrajectory w;
        w.kind = Kind::Sqrt;
        w.alpha = alpha;
        return w;
    }

    static WallTrajectory rest_then_linear(double v, double t_rest) {
        if (!(t_rest >= 0.0))
            throw std::invalid_argument("wall t_rest must be >= 0");
        WallTrajectory w;
        w.kind = Kind::RestThenLinear;
        w.v = v;
        w.t_rest = t_rest;
        return w;
    }

    double position(double t) const;
    double velocity(double t) const;
};

double wall_position(const WallTrajectory& traj, double t);
double wall_velocity(const WallTrajectory& traj, double t);

}  // namespace dmtrap
