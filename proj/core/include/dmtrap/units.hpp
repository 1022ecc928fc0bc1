#pragma once

#include <stdexcept>
#include <string>

namespace dmtrap {

/// Natural unit system used throughout: lengths in d (final mirror position),
/// times in T (total run time), hbar = 1.  Velocities come out in d/T,
/// energies in hbar/T and mass in hbar*T/d^2.  All engines work in these
/// units; conversion to SI happens only at the I/O layer.
struct Units {
    double d = 1.0;
    double T = 1.0;
    double hbar = 1.0;
    double mass = 1000.0;
};

inline void validate_units(const Units& u) {
    if (!(u.d > 0.0)) throw std::invalid_argument("units.d must be > 0");
    if (!(u.T > 0.0)) throw std::invalid_argument("units.T must be > 0");
    if (!(u.hbar > 0.0)) throw std::invalid_argument("units.hbar must be > 0");
    if (!(u.mass > 0.0)) throw std::invalid_argument("units.mass must be > 0");
}

}  // namespace dmtrap
