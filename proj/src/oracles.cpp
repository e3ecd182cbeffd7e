#include "truncmean/oracles.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "truncmean/errors.hpp"
#include "truncmean/rng.hpp"

namespace truncmean {

namespace {

struct Axis {
    double lo = 0.0;
    double step = 0.0;
    int points = 0;  // odd, for composite Simpson
};

// Simpson weights 1,4,2,...,2,4,1 (times h/3, folded into the caller's
// normalization, so only the pattern matters here).
double simpson_weight(int j, int points) {
    if (j == 0 || j == points - 1) return 1.0;
    return (j % 2 == 1) ? 4.0 : 2.0;
}

Vector tensor_grid_mean(const Problem& problem, const Matrix& prec, const Vector& sd,
                        int points, double extent) {
    const Index n = problem.size();
    std::vector<Axis> axes(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        const auto& b = problem.bounds[static_cast<std::size_t>(i)];
        const double width = extent * sd[i];
        Axis ax;
        ax.points = points;
        ax.lo = b.side == BoundSide::Left ? b.cut : b.cut - width;
        ax.step = width / (points - 1);
        axes[static_cast<std::size_t>(i)] = ax;
    }

    // Normalization constant drops out of the mean; integrate the
    // unnormalized density g and x_d * g on the same grid.
    double z = 0.0;
    Vector moment = Vector::Zero(n);
    Vector x(n);
    Vector d(n);
    std::array<int, 3> idx{0, 0, 0};
    const auto body = [&](double wprod) {
        for (Index i = 0; i < n; ++i) {
            x[i] = axes[static_cast<std::size_t>(i)].lo +
                   axes[static_cast<std::size_t>(i)].step * idx[static_cast<std::size_t>(i)];
            d[i] = x[i] - problem.mu[i];
        }
        const double q = d.dot(prec * d);
        const double g = wprod * std::exp(-0.5 * q);
        z += g;
        moment += g * x;
    };

    if (n == 1) {
        for (idx[0] = 0; idx[0] < points; ++idx[0]) body(simpson_weight(idx[0], points));
    } else if (n == 2) {
        for (idx[0] = 0; idx[0] < points; ++idx[0]) {
            const double w0 = simpson_weight(idx[0], points);
            for (idx[1] = 0; idx[1] < points; ++idx[1]) {
                body(w0 * simpson_weight(idx[1], points));
            }
        }
    } else {
        for (idx[0] = 0; idx[0] < points; ++idx[0]) {
            const double w0 = simpson_weight(idx[0], points);
            for (idx[1] = 0; idx[1] < points; ++idx[1]) {
                const double w01 = w0 * simpson_weight(idx[1], points);
                for (idx[2] = 0; idx[2] < points; ++idx[2]) {
                    body(w01 * simpson_weight(idx[2], points));
                }
            }
        }
    }
    if (!(z > 0.0)) {
        throw QuadratureNotConverged("quadrature_mean: density mass underflowed on the grid");
    }
    return moment / z;
}

}  // namespace

Vector quadrature_mean(const Problem& problem, int grid_points_per_dim, double extent_sigmas) {
    problem.validate();
    const Index n = problem.size();
    if (n > 3) throw DimensionTooLarge("quadrature_mean: supports n <= 3");
    if (grid_points_per_dim == 0) grid_points_per_dim = n <= 2 ? 512 : 160;
    if (grid_points_per_dim < 64) {
        throw std::invalid_argument("quadrature_mean: need at least 64 points per dimension");
    }
    if (!(extent_sigmas > 0.0)) {
        throw std::invalid_argument("quadrature_mean: extent must be positive");
    }

    // Odd point count gives an even panel count for Simpson.
    int points = grid_points_per_dim | 1;
    const Matrix cov = problem.covariance();
    const Matrix prec = problem.precision();
    const Vector sd = cov.diagonal().cwiseSqrt();

    const Vector coarse = tensor_grid_mean(problem, prec, sd, points, extent_sigmas);
    const Vector fine = tensor_grid_mean(problem, prec, sd, 2 * points - 1, extent_sigmas);
    const double disagreement = (coarse - fine).lpNorm<Eigen::Infinity>();
    if (disagreement > 1e-4) {
        throw QuadratureNotConverged("quadrature_mean: refinement disagreement " +
                                     std::to_string(disagreement) + " exceeds 1e-4");
    }
    return fine;
}

RejectionEstimate rejection_mean(const Problem& problem, std::int64_t target_accepts,
                                 std::uint64_t seed) {
    problem.validate();
    if (target_accepts < 1) {
        throw std::invalid_argument("rejection_mean: target_accepts must be >= 1");
    }
    const Index n = problem.size();
    const Matrix cov = problem.covariance();
    Eigen::LLT<Matrix> llt(cov);
    if (llt.info() != Eigen::Success) {
        throw NotPositiveDefinite("rejection_mean: covariance is not positive definite");
    }
    const Matrix chol = llt.matrixL();

    Rng rng(seed);
    Vector z(n), x(n);
    Vector mean = Vector::Zero(n);
    Vector m2 = Vector::Zero(n);
    RejectionEstimate est;
    constexpr std::int64_t kBudgetCheck = 1000000;
    while (est.accepts < target_accepts) {
        for (Index i = 0; i < n; ++i) z[i] = rng.standard_normal();
        x = problem.mu + chol * z;
        ++est.proposals;
        bool inside = true;
        for (Index i = 0; i < n && inside; ++i) {
            const auto& b = problem.bounds[static_cast<std::size_t>(i)];
            inside = b.side == BoundSide::Left ? x[i] >= b.cut : x[i] <= b.cut;
        }
        if (inside) {
            ++est.accepts;
            for (Index i = 0; i < n; ++i) {
                const double d = x[i] - mean[i];
                mean[i] += d / static_cast<double>(est.accepts);
                m2[i] += d * (x[i] - mean[i]);
            }
        }
        if (est.proposals == kBudgetCheck && est.accepts < kBudgetCheck / 10000) {
            throw AcceptanceTooLow("rejection_mean: acceptance rate below 1e-4 after 1e6 proposals");
        }
    }
    est.mean = mean;
    est.standard_error = est.accepts > 1
                             ? Vector((m2 / static_cast<double>(est.accepts - 1) /
                                       static_cast<double>(est.accepts))
                                          .cwiseSqrt())
                             : Vector(Vector::Zero(n));
    return est;
}

}  // namespace truncmean
