#pragma once

namespace dmtrap {

/// How the width parameter enters the Gaussian exponent.
///
/// HalfSigmaSquared treats sigma as a length: real walls decay as
/// exp(-x^2 / (2 sigma^2)) and the quench term as exp(-x^2 / sigma^2).
/// LiteralSigma keeps sigma itself in the denominator, exp(-x^2 / (2 sigma))
/// resp. exp(-x^2 / sigma), so sigma then carries length^2 units.  The
/// default is HalfSigmaSquared; LiteralSigma is retained for side-by-side
/// comparison runs.
enum class ExponentConvention { HalfSigmaSquared, LiteralSigma };

/// Gaussian barrier (or absorber) profile.  `imaginary` marks the quench
/// term, whose exponent omits the factor 2 under HalfSigmaSquared.
struct GaussianPotentialSpec {
    double amplitude = 0.0;  // V0, energy in hbar/T; >= 0
    double sigma = 1.0;      // width, length in d (length^2 under LiteralSigma)
    ExponentConvention convention = ExponentConvention::HalfSigmaSquared;
    bool imaginary = false;

    double value(double displacement) const;
};

double potential_value(const GaussianPotentialSpec& spec, double displacement);

/// Denominator of the Gaussian exponent, value(x) = V0 * exp(-x^2 / denom).
double exponent_denominator(const GaussianPotentialSpec& spec);

}  // namespace dmtrap
