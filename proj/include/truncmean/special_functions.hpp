#pragma once

namespace truncmean {

namespace num {
inline constexpr double sqrt_pi = 1.7724538509055160273;
inline constexpr double sqrt_two = 1.4142135623730950488;
inline constexpr double sqrt_two_pi = 2.5066282746310005024;
inline constexpr double sqrt_two_over_pi = 0.79788456080286535588;
inline constexpr double inv_sqrt_two_pi = 0.39894228040143267794;
}  // namespace num

// Complementary error function, (2/sqrt(pi)) * integral of exp(-t^2) over [x, inf).
// Rational Chebyshev approximation; relative error below ~1e-15 across the range,
// underflows to 0 only past x ~ 26.5 where the true value is < 1e-306.
double erfc(double x);

// Scaled complementary error function exp(x^2) * erfc(x). Stays finite for
// arbitrarily large positive x (decays like 1/(x*sqrt(pi))); returns +inf for
// x < -26.6 where the true value exceeds the double range.
double erfcx(double x);

// hazard_ratio(x) = exp(-x^2) / erfc(-x), strictly positive and strictly
// decreasing. sqrt(2/pi) * hazard_ratio((mu-a)/(sqrt(2)*sigma)) * sigma is the
// mean excess over a of a normal left-truncated at a. Computed as 1/erfcx(-x),
// which is stable where the naive ratio degenerates to 0/0.
double hazard_ratio(double x);

// Derivative of hazard_ratio: -2x h(x) - (2/sqrt(pi)) h(x)^2.
// Bounded in [-sqrt(pi), 0] for all real x.
double hazard_ratio_deriv(double x);

// Standard normal density.
double norm_pdf(double x);

// Standard normal distribution function, computed as erfc(-x/sqrt(2))/2.
double norm_cdf(double x);

// Inverse of norm_cdf on p in (0,1); throws std::domain_error otherwise.
// Rational initial estimate refined by one Halley step on the cdf.
double norm_quantile(double p);

}  // namespace truncmean
