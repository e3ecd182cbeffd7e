#include "truncmean/linear_core.hpp"

#include <cmath>
#include <stdexcept>

#include "truncmean/errors.hpp"

namespace truncmean {

namespace {

void require_square_symmetric(const Matrix& m, const char* who) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw std::invalid_argument(std::string(who) + ": matrix must be square and non-empty");
    }
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw std::invalid_argument(std::string(who) + ": matrix must be symmetric");
    }
}

}  // namespace

Matrix invert_spd(const Matrix& sigma) {
    require_square_symmetric(sigma, "invert_spd");
    Eigen::LLT<Matrix> llt(sigma);
    if (llt.info() != Eigen::Success) {
        throw NotPositiveDefinite("invert_spd: Cholesky factorization failed");
    }
    Matrix inv = llt.solve(Matrix::Identity(sigma.rows(), sigma.cols()));
    inv = ((inv + inv.transpose()) * 0.5).eval();
    return inv;
}

DominanceReport dominance_report(const Matrix& sigma_inv) {
    require_square_symmetric(sigma_inv, "dominance_report");
    DominanceReport rep;
    for (Index i = 0; i < sigma_inv.rows(); ++i) {
        const double dii = std::fabs(sigma_inv(i, i));
        if (dii == 0.0) throw ZeroDiagonal("dominance_report: zero diagonal entry");
        const double off = sigma_inv.row(i).cwiseAbs().sum() - dii;
        const double m = off / dii;
        if (m > rep.modulus) {
            rep.modulus = m;
            rep.worst_row = i;
        }
    }
    rep.is_dominant = rep.modulus < 1.0;
    return rep;
}

Matrix TridiagonalPrecision::dense() const {
    const Index n = size();
    Matrix m = Matrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = diag[i];
    for (Index i = 0; i + 1 < n; ++i) {
        m(i, i + 1) = off[i];
        m(i + 1, i) = off[i];
    }
    return m;
}

ConditionalParams ConditionalParams::from_precision(const Vector& mu, const Matrix& sigma_inv) {
    require_square_symmetric(sigma_inv, "ConditionalParams");
    const Index n = sigma_inv.rows();
    if (mu.size() != n) throw std::invalid_argument("ConditionalParams: mu/matrix size mismatch");

    ConditionalParams p;
    p.mu_ = mu;
    p.sigma_star_.resize(n);
    p.coupling_.resize(n, n);
    for (Index i = 0; i < n; ++i) {
        const double sii = sigma_inv(i, i);
        if (!(sii > 0.0)) {
            throw NotPositiveDefinite("ConditionalParams: precision diagonal must be positive");
        }
        p.sigma_star_[i] = 1.0 / std::sqrt(sii);
        p.coupling_.row(i) = sigma_inv.row(i) * (-1.0 / sii);
        p.coupling_(i, i) = 0.0;
    }
    p.offset_ = p.coupling_ * mu;
    return p;
}

ConditionalParams ConditionalParams::from_covariance(const Vector& mu, const Matrix& sigma) {
    return from_precision(mu, invert_spd(sigma));
}

ConditionalParams ConditionalParams::from_tridiagonal_precision(const Vector& mu,
                                                                const TridiagonalPrecision& prec) {
    const Index n = prec.size();
    if (n == 0) throw std::invalid_argument("ConditionalParams: empty precision");
    if (prec.off.size() != n - 1) {
        throw std::invalid_argument("ConditionalParams: off-diagonal must have n-1 entries");
    }
    if (mu.size() != n) throw std::invalid_argument("ConditionalParams: mu/matrix size mismatch");

    ConditionalParams p;
    p.banded_ = true;
    p.mu_ = mu;
    p.sigma_star_.resize(n);
    p.low_ = Vector::Zero(n);
    p.high_ = Vector::Zero(n);
    for (Index i = 0; i < n; ++i) {
        const double sii = prec.diag[i];
        if (!(sii > 0.0)) {
            throw NotPositiveDefinite("ConditionalParams: precision diagonal must be positive");
        }
        p.sigma_star_[i] = 1.0 / std::sqrt(sii);
        if (i > 0) p.low_[i] = -prec.off[i - 1] / sii;
        if (i + 1 < n) p.high_[i] = -prec.off[i] / sii;
    }
    return p;
}

double ConditionalParams::conditional_mean(Index i, const Vector& x) const {
    if (banded_) {
        double m = mu_[i];
        if (i > 0) m += low_[i] * (x[i - 1] - mu_[i - 1]);
        if (i + 1 < size()) m += high_[i] * (x[i + 1] - mu_[i + 1]);
        return m;
    }
    return mu_[i] + coupling_.row(i).dot(x) - offset_[i];
}

double ConditionalParams::coupling_l1(Index i) const {
    if (banded_) return std::fabs(low_[i]) + std::fabs(high_[i]);
    return coupling_.row(i).cwiseAbs().sum();
}

Vector ConditionalParams::coupling_row(Index i) const {
    if (!banded_) return coupling_.row(i);
    Vector row = Vector::Zero(size());
    if (i > 0) row[i - 1] = low_[i];
    if (i + 1 < size()) row[i + 1] = high_[i];
    return row;
}

DominanceReport ConditionalParams::dominance() const {
    DominanceReport rep;
    for (Index i = 0; i < size(); ++i) {
        const double m = coupling_l1(i);
        if (m > rep.modulus) {
            rep.modulus = m;
            rep.worst_row = i;
        }
    }
    rep.is_dominant = rep.modulus < 1.0;
    return rep;
}

ConditionalParams conditional_params(const Vector& mu, const Matrix& sigma) {
    return ConditionalParams::from_covariance(mu, sigma);
}

}  // namespace truncmean
