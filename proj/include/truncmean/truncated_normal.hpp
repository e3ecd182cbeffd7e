#pragma once

#include "truncmean/rng.hpp"

namespace truncmean {

// One-sided truncation of a single coordinate. Left keeps the support
// [cut, inf), Right keeps (-inf, cut].
enum class BoundSide { Left, Right };

struct TruncationBound {
    BoundSide side = BoundSide::Left;
    double cut = 0.0;

    static TruncationBound left(double a) { return {BoundSide::Left, a}; }
    static TruncationBound right(double b) { return {BoundSide::Right, b}; }
};

// Mean of N(mu, sigma^2) restricted to [a, b], a < b, sigma > 0.
// Throws DegenerateInterval when the interval mass underflows to zero.
double truncated_mean_two_sided(double mu, double sigma, double a, double b);

// Mean of N(mu, sigma^2) restricted to one side of the cut. Total: the
// hazard-ratio form stays accurate arbitrarily deep in the tail, and the
// result is anchored at the cut so it lands strictly on the correct side.
double truncated_mean_one_sided(double mu, double sigma, TruncationBound bound);

// One exact draw from the one-sided truncated normal. Inverse-cdf for
// moderate cuts; exponential rejection when the standardized cut exceeds 5,
// where the cdf inverse runs out of accuracy.
double sample_truncated(double mu, double sigma, TruncationBound bound, Rng& rng);

}  // namespace truncmean
