#include "logkahler/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace logkahler {

GaussHermite::GaussHermite(int order) {
    if (order < 2) {
        throw std::invalid_argument("GaussHermite: order must be >= 2");
    }
    // Symmetric tridiagonal Jacobi matrix for physicists' Hermite
    // polynomials: off-diagonal b_k = sqrt(k/2).
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
    for (int k = 1; k < order; ++k) {
        const double b = std::sqrt(0.5 * k);
        jacobi(k, k - 1) = b;
        jacobi(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    nodes_.resize(order);
    weights_.resize(order);
    for (int i = 0; i < order; ++i) {
        nodes_[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        weights_[i] = v0 * v0;  // w_i / sqrt(pi); sums to 1
    }
}

double GaussHermite::expect(const std::function<double(double)>& f, double mu,
                            double sigma) const {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::domain_error("GaussHermite: degenerate sigma");
    }
    double acc = 0.0;
    const double scale = std::sqrt(2.0) * sigma;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        acc += weights_[i] * f(mu + scale * nodes_[i]);
    }
    return acc;
}

Matrix2 fisher_metric_oracle(const NaturalPoint& p, const QuadratureSpec& q) {
    GaussHermite gh(q.order);
    const double mu = p.mu();
    const double sigma = std::sqrt(p.sigma2());
    Matrix2 h;
    for (int i = 0; i < 2; ++i) {
        for (int j = i; j < 2; ++j) {
            h(i, j) = gh.expect(
                [&](double u) {
                    const Vector2 s = score(u, p);
                    return s(i) * s(j);
                },
                mu, sigma);
            h(j, i) = h(i, j);
        }
    }
    return h;
}

Vector2 score_mean(const NaturalPoint& p, const QuadratureSpec& q) {
    GaussHermite gh(q.order);
    const double mu = p.mu();
    const double sigma = std::sqrt(p.sigma2());
    Vector2 m;
    for (int k = 0; k < 2; ++k) {
        m(k) = gh.expect([&](double u) { return score(u, p)(k); }, mu, sigma);
    }
    return m;
}

Christoffel2 christoffel_e(const NaturalPoint& p, const QuadratureSpec& q) {
    GaussHermite gh(q.order);
    const double mu = p.mu();
    const double sigma = std::sqrt(p.sigma2());
    const Matrix2 d2 = log_likelihood_hessian(p);
    Christoffel2 gamma{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                gamma[i][j][k] = gh.expect(
                    [&](double u) { return d2(i, j) * score(u, p)(k); }, mu,
                    sigma);
            }
        }
    }
    return gamma;
}

}  // namespace logkahler
