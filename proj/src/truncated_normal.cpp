#include "truncmean/truncated_normal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "truncmean/errors.hpp"
#include "truncmean/special_functions.hpp"

namespace truncmean {

double truncated_mean_two_sided(double mu, double sigma, double a, double b) {
    if (!(sigma > 0.0)) throw std::invalid_argument("truncated_mean_two_sided: sigma must be > 0");
    if (!(a < b)) throw std::invalid_argument("truncated_mean_two_sided: requires a < b");
    const double alpha = (a - mu) / sigma;
    const double beta = (b - mu) / sigma;
    // Phi(beta) - Phi(alpha) without forming the cdf values themselves.
    const double mass = 0.5 * (erfc(alpha / num::sqrt_two) - erfc(beta / num::sqrt_two));
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw DegenerateInterval("truncated_mean_two_sided: interval mass underflowed to zero");
    }
    return mu + (norm_pdf(alpha) - norm_pdf(beta)) / mass * sigma;
}

double truncated_mean_one_sided(double mu, double sigma, TruncationBound bound) {
    if (!(sigma > 0.0)) throw std::invalid_argument("truncated_mean_one_sided: sigma must be > 0");
    // Anchoring at the cut, the mean excess is sqrt(2)*sigma*(h(z)/sqrt(pi) + z)
    // with z the signed standardized distance of mu from the cut. The bracket is
    // strictly positive for all z (h(z) > -sqrt(pi) z), so the result cannot
    // fall on the wrong side of the cut even when mu sits far past it.
    if (bound.side == BoundSide::Left) {
        const double z = (mu - bound.cut) / (num::sqrt_two * sigma);
        return bound.cut + num::sqrt_two * sigma * (hazard_ratio(z) / num::sqrt_pi + z);
    }
    const double z = (bound.cut - mu) / (num::sqrt_two * sigma);
    return bound.cut - num::sqrt_two * sigma * (hazard_ratio(z) / num::sqrt_pi + z);
}

namespace {

// Draw from N(0,1) conditioned on Z >= alpha.
double sample_lower_tail_std(double alpha, Rng& rng) {
    if (alpha <= 5.0) {
        // Invert the upper-tail mass: v uniform in (0, P(Z >= alpha)).
        const double tail = norm_cdf(-alpha);
        const double v = tail * (1.0 - rng.uniform01());
        return -norm_quantile(v);
    }
    // Robert-style shifted exponential rejection; exact for any cut and the
    // acceptance rate stays above ~0.75.
    const double lambda = 0.5 * (alpha + std::sqrt(alpha * alpha + 4.0));
    for (;;) {
        const double z = alpha + rng.exponential() / lambda;
        const double d = z - lambda;
        if (rng.uniform01() <= std::exp(-0.5 * d * d)) return z;
    }
}

}  // namespace

double sample_truncated(double mu, double sigma, TruncationBound bound, Rng& rng) {
    if (!(sigma > 0.0)) throw std::invalid_argument("sample_truncated: sigma must be > 0");
    if (bound.side == BoundSide::Left) {
        const double alpha = (bound.cut - mu) / sigma;
        const double z = sample_lower_tail_std(alpha, rng);
        return std::max(bound.cut, mu + sigma * z);
    }
    const double alpha = (mu - bound.cut) / sigma;
    const double z = sample_lower_tail_std(alpha, rng);
    return std::min(bound.cut, mu - sigma * z);
}

}  // namespace truncmean
