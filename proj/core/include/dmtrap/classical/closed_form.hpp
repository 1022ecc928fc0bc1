#pragma once

namespace dmtrap::classical {

/// Closed-form post-collision velocity for the linear scheme.  Even n are
/// velocities after diode collisions, odd n after mirror collisions:
///   n even:  v_n = n (v_d - v_m) + v_i
///   n odd:   v_n = (n - 1)(v_m - v_d) + 2 v_m - v_i
double velocity_after_n(int n, double v_i, double v_d, double v_m);

/// Closed-form time of the nth collision for the linear scheme with the
/// particle starting left of both walls:
///   t_n = x_i / (v_m - v_i) * prod_{k even, 2..n-1} (v_k - v_d)/(v_k - v_m)
///                           * prod_{l odd, 1..n-1} (v_l - v_m)/(v_l - v_d)
/// with v_k from velocity_after_n.  v_i = v_m is rejected (the particle
/// co-moves with the mirror and the leading factor is singular).
double time_of_nth(int n, double x_i, double v_i, double v_d, double v_m);

/// Bound on the total collision count in the linear scheme.  The exact
/// count n_max satisfies lower <= n_max <= upper with
/// r = (v_i - v_d) / (v_m - v_d), lower = r - 1, upper = r.
struct CollisionBound {
    double r;
    double lower;
    double upper;
};

CollisionBound max_collisions(double v_i, double v_d, double v_m);

}  // namespace dmtrap::classical
