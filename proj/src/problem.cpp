#include "truncmean/problem.hpp"

#include <cmath>
#include <stdexcept>

#include "truncmean/errors.hpp"

namespace truncmean {

void Problem::validate() const {
    const Index n = mu.size();
    if (n == 0) throw std::invalid_argument("Problem: mu must be non-empty");
    for (Index i = 0; i < n; ++i) {
        if (!std::isfinite(mu[i])) throw std::invalid_argument("Problem: mu must be finite");
    }
    const int sources = (sigma ? 1 : 0) + (sigma_inv ? 1 : 0) + (expcorr ? 1 : 0);
    if (sources != 1) {
        throw std::invalid_argument(
            "Problem: exactly one of sigma, sigma_inv, expcorr must be given");
    }
    if (sigma && (sigma->rows() != n || sigma->cols() != n)) {
        throw std::invalid_argument("Problem: sigma dimensions do not match mu");
    }
    if (sigma_inv && (sigma_inv->rows() != n || sigma_inv->cols() != n)) {
        throw std::invalid_argument("Problem: sigma_inv dimensions do not match mu");
    }
    if (expcorr && expcorr->n != n) {
        throw std::invalid_argument("Problem: expcorr dimension does not match mu");
    }
    if (static_cast<Index>(bounds.size()) != n) {
        throw std::invalid_argument("Problem: bounds length does not match mu");
    }
    for (const auto& b : bounds) {
        if (!std::isfinite(b.cut)) throw std::invalid_argument("Problem: cuts must be finite");
    }
}

ConditionalParams Problem::conditional_params() const {
    validate();
    if (expcorr) {
        return ConditionalParams::from_tridiagonal_precision(mu, build_expcorr_inverse(*expcorr));
    }
    if (sigma_inv) return ConditionalParams::from_precision(mu, *sigma_inv);
    return ConditionalParams::from_covariance(mu, *sigma);
}

Matrix Problem::covariance() const {
    validate();
    if (sigma) return *sigma;
    if (sigma_inv) return invert_spd(*sigma_inv);
    return build_expcorr(*expcorr);
}

Matrix Problem::precision() const {
    validate();
    if (sigma_inv) return *sigma_inv;
    if (expcorr) return build_expcorr_inverse(*expcorr).dense();
    return invert_spd(*sigma);
}

Problem make_problem(Vector mu, Matrix sigma, std::vector<TruncationBound> bounds) {
    Problem p;
    p.mu = std::move(mu);
    p.sigma = std::move(sigma);
    p.bounds = std::move(bounds);
    p.validate();
    return p;
}

Problem make_problem_from_precision(Vector mu, Matrix sigma_inv,
                                    std::vector<TruncationBound> bounds) {
    Problem p;
    p.mu = std::move(mu);
    p.sigma_inv = std::move(sigma_inv);
    p.bounds = std::move(bounds);
    p.validate();
    return p;
}

Problem make_expcorr_problem(const ExpCorrSpec& spec, Vector mu,
                             std::vector<TruncationBound> bounds) {
    Problem p;
    p.mu = std::move(mu);
    p.expcorr = spec;
    p.bounds = std::move(bounds);
    p.validate();
    return p;
}

}  // namespace truncmean
