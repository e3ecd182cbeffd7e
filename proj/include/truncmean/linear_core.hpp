#pragma once

#include <Eigen/Dense>

namespace truncmean {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Inverse of a symmetric positive definite matrix via Cholesky; the result is
// explicitly symmetrized. Throws NotPositiveDefinite when the factorization
// fails and std::invalid_argument for non-square or asymmetric input.
Matrix invert_spd(const Matrix& sigma);

// Row-wise diagonal dominance of a precision matrix: modulus is the largest
// ratio of off-diagonal absolute row sum to |diagonal|; strict dominance
// means modulus < 1.
struct DominanceReport {
    bool is_dominant = false;
    double modulus = 0.0;
    Index worst_row = 0;
};

// Throws ZeroDiagonal if any diagonal entry vanishes.
DominanceReport dominance_report(const Matrix& sigma_inv);

// Symmetric tridiagonal matrix in band form: diag has n entries, off the
// n-1 entries of the first off-diagonal.
struct TridiagonalPrecision {
    Vector diag;
    Vector off;

    Index size() const { return diag.size(); }
    Matrix dense() const;
};

// Per-coordinate parameters of the one-dimensional conditionals of
// N(mu, Sigma): the conditional standard deviation sigma_star[i] =
// 1/sqrt((Sigma^-1)_ii) and the coupling row that maps (x - mu) to the shift
// of the conditional mean, i.e. row i of -Sigma^-1 scaled by 1/(Sigma^-1)_ii
// with a zero diagonal. Both identities come from the Schur complement of
// the block-partitioned inverse. A banded construction accepts a tridiagonal
// precision directly, keeping storage and per-evaluation cost O(n).
class ConditionalParams {
public:
    static ConditionalParams from_covariance(const Vector& mu, const Matrix& sigma);
    static ConditionalParams from_precision(const Vector& mu, const Matrix& sigma_inv);
    static ConditionalParams from_tridiagonal_precision(const Vector& mu,
                                                        const TridiagonalPrecision& prec);

    Index size() const { return mu_.size(); }
    const Vector& mu() const { return mu_; }
    const Vector& sigma_star() const { return sigma_star_; }
    double sigma_star(Index i) const { return sigma_star_[i]; }

    // Conditional mean of coordinate i given the others held at x:
    // mu_i + coupling_row(i) . (x - mu). Does not read x[i].
    double conditional_mean(Index i, const Vector& x) const;

    // l1 norm of coupling row i; the maximum over rows is the contraction
    // modulus of the coordinate-update map.
    double coupling_l1(Index i) const;

    // Materialized coupling row (length n, zero at position i).
    Vector coupling_row(Index i) const;

    // Dominance of the underlying precision, computed from the coupling rows.
    DominanceReport dominance() const;

    bool banded() const { return banded_; }

private:
    ConditionalParams() = default;

    Vector mu_;
    Vector sigma_star_;
    // dense path
    Matrix coupling_;
    Vector offset_;  // coupling_.row(i) . mu, precomputed
    // banded path: coupling to the two neighbors
    Vector low_, high_;
    bool banded_ = false;
};

// Conditional parameters straight from a covariance matrix (one factorization,
// then the inverse-row identities above).
ConditionalParams conditional_params(const Vector& mu, const Matrix& sigma);

}  // namespace truncmean
