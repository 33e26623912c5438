#include "logkahler/lognormal.hpp"

#include <cmath>
#include <stdexcept>

namespace logkahler {

namespace {
const double kHalfLog2Pi = 0.5 * std::log(2.0 * M_PI);
}

NaturalPoint::NaturalPoint(double t1, double t2) : theta1(t1), theta2(t2) {
    if (!(std::isfinite(t1) && std::isfinite(t2))) {
        throw std::domain_error("NaturalPoint: coordinates must be finite");
    }
    if (t2 >= kTheta2Guard) {
        throw std::domain_error("NaturalPoint: theta2 must be < -1e-12");
    }
}

double log_likelihood(double x, const NaturalPoint& p) {
    if (!(x > 0.0)) {
        throw std::domain_error("log_likelihood: x must be positive");
    }
    const double u = std::log(x);
    return -u + p.theta1 * u + p.theta2 * u * u +
           p.theta1 * p.theta1 / (4.0 * p.theta2) +
           0.5 * std::log(-2.0 * p.theta2) - kHalfLog2Pi;
}

double potential(const NaturalPoint& p) {
    return -p.theta1 * p.theta1 / (4.0 * p.theta2) -
           0.5 * std::log(-2.0 * p.theta2) + kHalfLog2Pi;
}

DualPoint dual_coordinates(const NaturalPoint& p) {
    const double t1 = p.theta1, t2 = p.theta2;
    return {-t1 / (2.0 * t2), (t1 * t1 - 2.0 * t2) / (4.0 * t2 * t2)};
}

Matrix2 fisher_metric(const NaturalPoint& p) {
    const double t1 = p.theta1, t2 = p.theta2;
    Matrix2 h;
    h(0, 0) = -1.0 / (2.0 * t2);
    h(0, 1) = t1 / (2.0 * t2 * t2);
    h(1, 0) = h(0, 1);
    h(1, 1) = -(t1 * t1 - t2) / (2.0 * t2 * t2 * t2);
    return h;
}

Matrix2 inverse_metric(const NaturalPoint& p) {
    const double t1 = p.theta1, t2 = p.theta2;
    Matrix2 hinv;
    hinv(0, 0) = 2.0 * t1 * t1 - 2.0 * t2;
    hinv(0, 1) = 2.0 * t1 * t2;
    hinv(1, 0) = hinv(0, 1);
    hinv(1, 1) = 2.0 * t2 * t2;
    return hinv;
}

Vector2 score(double u, const NaturalPoint& p) {
    // d l / d theta1 = u - mu,  d l / d theta2 = u^2 - (mu^2 + sigma^2)
    const double t1 = p.theta1, t2 = p.theta2;
    return {u + t1 / (2.0 * t2),
            u * u - t1 * t1 / (4.0 * t2 * t2) + 1.0 / (2.0 * t2)};
}

Matrix2 log_likelihood_hessian(const NaturalPoint& p) {
    const double t1 = p.theta1, t2 = p.theta2;
    Matrix2 d2;
    d2(0, 0) = 1.0 / (2.0 * t2);
    d2(0, 1) = -t1 / (2.0 * t2 * t2);
    d2(1, 0) = d2(0, 1);
    d2(1, 1) = t1 * t1 / (2.0 * t2 * t2 * t2) - 1.0 / (2.0 * t2 * t2);
    return d2;
}

}  // namespace logkahler
