#include "dmtrap/potential.hpp"

#include <cmath>

namespace dmtrap {

double exponent_denominator(const GaussianPotentialSpec& spec) {
    if (spec.convention == ExponentConvention::HalfSigmaSquared)
        return spec.imaginary ? spec.sigma * spec.sigma
                              : 2.0 * spec.sigma * spec.sigma;
    return spec.imaginary ? spec.sigma : 2.0 * spec.sigma;
}

double potential_value(const GaussianPotentialSpec& spec, double displacement) {
    const double x2 = displacement * displacement;
    return spec.amplitude * std::exp(-x2 / exponent_denominator(spec));
}

double GaussianPotentialSpec::value(double displacement) const {
    return potential_value(*this, displacement);
}

}  // namespace dmtrap
