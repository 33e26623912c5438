#pragma once

#include <Eigen/Dense>

namespace logkahler {

using Matrix2 = Eigen::Matrix2d;
using Vector2 = Eigen::Vector2d;

// Guard against the sigma^2 -> inf singularity at theta2 = 0.
inline constexpr double kTheta2Guard = -1e-12;

/// A point of the lognormal manifold in natural coordinates,
/// theta1 = mu/sigma^2, theta2 = -1/(2 sigma^2) < 0.
struct NaturalPoint {
    double theta1;
    double theta2;

    NaturalPoint(double t1, double t2);

    double mu() const { return -theta1 / (2.0 * theta2); }
    double sigma2() const { return -1.0 / (2.0 * theta2); }
};

/// Expectation coordinates: eta1 = E[log x], eta2 = E[log^2 x].
struct DualPoint {
    double eta1;
    double eta2;
};

/// Log-density of the lognormal law at x > 0.
double log_likelihood(double x, const NaturalPoint& p);

/// Cumulant/normalizer function; its gradient gives the dual coordinates
/// and its Hessian the Fisher metric.
double potential(const NaturalPoint& p);

DualPoint dual_coordinates(const NaturalPoint& p);

/// Closed-form Fisher metric in natural coordinates.
Matrix2 fisher_metric(const NaturalPoint& p);

/// Closed-form inverse of the Fisher metric.
Matrix2 inverse_metric(const NaturalPoint& p);

// Analytic derivatives of the log-likelihood with respect to theta,
// as functions of u = log x.  The score has zero mean; the second
// derivatives do not depend on u.
Vector2 score(double u, const NaturalPoint& p);
Matrix2 log_likelihood_hessian(const NaturalPoint& p);

}  // namespace logkahler
