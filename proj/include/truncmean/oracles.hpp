#pragma once

#include <cstdint>

#include "truncmean/problem.hpp"

namespace truncmean {

// Ground truth for the truncated mean by tensor-grid Simpson integration of
// x * density over the support box, cut off extent_sigmas marginal standard
// deviations past each cut. Runs once on the requested grid and once with
// halved spacing; throws QuadratureNotConverged if the two disagree by more
// than 1e-4 in any coordinate, otherwise returns the finer result.
// grid_points_per_dim = 0 picks 512 for n <= 2 and 160 for n = 3; explicit
// values must be >= 64. Throws DimensionTooLarge for n > 3.
Vector quadrature_mean(const Problem& problem, int grid_points_per_dim = 0,
                       double extent_sigmas = 10.0);

struct RejectionEstimate {
    Vector mean;
    Vector standard_error;  // per coordinate, sd / sqrt(accepts)
    std::int64_t accepts = 0;
    std::int64_t proposals = 0;
};

// Monte Carlo ground truth: propose from the untruncated N(mu, Sigma) via a
// Cholesky factor, keep the points inside the box, average. Throws
// AcceptanceTooLow if fewer than 1e-4 of the first 1e6 proposals land inside.
RejectionEstimate rejection_mean(const Problem& problem, std::int64_t target_accepts,
                                 std::uint64_t seed);

}  // namespace truncmean
