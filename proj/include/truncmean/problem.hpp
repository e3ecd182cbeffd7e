#pragma once

#include <optional>
#include <vector>

#include "truncmean/expcorr.hpp"
#include "truncmean/linear_core.hpp"
#include "truncmean/truncated_normal.hpp"

namespace truncmean {

// A full instance: untruncated mean, covariance (given directly, as a
// precision matrix, or as an exponential-correlation spec) and one
// truncation bound per coordinate. Exactly one covariance source must be set.
struct Problem {
    Vector mu;
    std::optional<Matrix> sigma;
    std::optional<Matrix> sigma_inv;
    std::optional<ExpCorrSpec> expcorr;
    std::vector<TruncationBound> bounds;

    Index size() const { return mu.size(); }

    // Dimension consistency, finiteness of cuts, single covariance source.
    // Throws std::invalid_argument on violation.
    void validate() const;

    // Conditional parameters along the cheapest available route: precision
    // rows when a precision is given (banded for expcorr), one Cholesky
    // inversion when only the covariance is given.
    ConditionalParams conditional_params() const;

    // Materialized covariance / precision; inverts when only the other form
    // is stored. Intended for the low-dimensional oracles.
    Matrix covariance() const;
    Matrix precision() const;
};

// Convenience constructors.
Problem make_problem(Vector mu, Matrix sigma, std::vector<TruncationBound> bounds);
Problem make_problem_from_precision(Vector mu, Matrix sigma_inv,
                                    std::vector<TruncationBound> bounds);
Problem make_expcorr_problem(const ExpCorrSpec& spec, Vector mu,
                             std::vector<TruncationBound> bounds);

}  // namespace truncmean
