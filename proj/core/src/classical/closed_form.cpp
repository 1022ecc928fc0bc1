#include "dmtrap/classical/closed_form.hpp"

#include <stdexcept>

namespace dmtrap::classical {

double velocity_after_n(int n, double v_i, double v_d, double v_m) {
    if (n < 0) throw std::invalid_argument("velocity_after_n: n must be >= 0");
    if (n % 2 == 0) return n * (v_d - v_m) + v_i;
    return (n - 1) * (v_m - v_d) + 2.0 * v_m - v_i;
}

double time_of_nth(int n, double x_i, double v_i, double v_d, double v_m) {
    if (n < 1) throw std::invalid_argument("time_of_nth: n must be >= 1");
    if (v_i == v_m)
        throw std::invalid_argument(
            "time_of_nth: v_i = v_m is singular (particle co-moves with the mirror)");
    double t = x_i / (v_m - v_i);
    for (int k = 2; k <= n - 1; k += 2) {
        const double v_k = velocity_after_n(k, v_i, v_d, v_m);
        t *= (v_k - v_d) / (v_k - v_m);
    }
    for (int l = 1; l <= n - 1; l += 2) {
        const double v_l = velocity_after_n(l, v_i, v_d, v_m);
        t *= (v_l - v_m) / (v_l - v_d);
    }
    return t;
}

CollisionBound max_collisions(double v_i, double v_d, double v_m) {
    if (!(v_m > v_d))
        throw std::invalid_argument("max_collisions: requires v_m > v_d");
    if (!(v_i >= v_m))
        throw std::invalid_argument("max_collisions: requires v_i >= v_m");
    const double r = (v_i - v_d) / (v_m - v_d);
    return CollisionBound{r, r - 1.0, r};
}

}  // namespace dmtrap::classical
