#pragma once

#include <stdexcept>

namespace truncmean {

// Covariance factorization failed: input is not symmetric positive definite
// (or is numerically singular).
struct NotPositiveDefinite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A precision matrix row has a zero diagonal entry; row moduli are undefined.
struct ZeroDiagonal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two-sided truncation interval carries no representable probability mass.
struct DegenerateInterval : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Solver was asked to enforce diagonal dominance and the input violates it.
struct NotDominant : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Trace too short for the requested diagnostic.
struct InsufficientTrace : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tensor-grid quadrature only supports low dimensions.
struct DimensionTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grid refinement disagreement stayed above the oracle's error budget.
struct QuadratureNotConverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejection sampler hit the proposal budget with a vanishing acceptance rate.
struct AcceptanceTooLow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace truncmean
