#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "logkahler/finite_diff.hpp"
#include "logkahler/lognormal.hpp"
#include "logkahler/quadrature.hpp"
#include "logkahler/suites.hpp"

using namespace logkahler;

namespace {
const double kLog2Pi = std::log(2.0 * M_PI);
}

TEST_CASE("natural point validation") {
    CHECK_THROWS_AS(NaturalPoint(0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(NaturalPoint(0.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(NaturalPoint(std::nan(""), -1.0), std::domain_error);
    const NaturalPoint p(1.0, -1.0);
    CHECK(p.mu() == doctest::Approx(0.5));
    CHECK(p.sigma2() == doctest::Approx(0.5));
}

TEST_CASE("log likelihood pinned values") {
    // u = -1, theta = (0, -1/2): 1 - 1/2 - log(2 pi)/2.
    const double x = std::exp(-1.0);
    CHECK(log_likelihood(x, NaturalPoint(0.0, -0.5)) ==
          doctest::Approx(0.5 - 0.5 * kLog2Pi).epsilon(1e-12));
    CHECK_THROWS_AS(log_likelihood(-1.0, NaturalPoint(0.0, -0.5)),
                    std::domain_error);
}

TEST_CASE("potential pinned values") {
    CHECK(potential(NaturalPoint(0.0, -0.5)) ==
          doctest::Approx(0.5 * kLog2Pi).epsilon(1e-12));
    CHECK(potential(NaturalPoint(1.0, -1.0)) ==
          doctest::Approx(0.25 - 0.5 * std::log(2.0) + 0.5 * kLog2Pi)
              .epsilon(1e-12));
}

TEST_CASE("dual coordinates pinned values") {
    const DualPoint d = dual_coordinates(NaturalPoint(1.0, -1.0));
    CHECK(d.eta1 == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(d.eta2 == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("metric pinned values and inverse") {
    const Matrix2 h0 = fisher_metric(NaturalPoint(0.0, -0.5));
    CHECK(h0(0, 0) == doctest::Approx(1.0));
    CHECK(h0(0, 1) == doctest::Approx(0.0));
    CHECK(h0(1, 1) == doctest::Approx(2.0));

    const Matrix2 h1 = fisher_metric(NaturalPoint(1.0, -1.0));
    CHECK(h1(0, 0) == doctest::Approx(0.5));
    CHECK(h1(0, 1) == doctest::Approx(0.5));
    CHECK(h1(1, 1) == doctest::Approx(1.0));

    for (const NaturalPoint& p : standard_theta_grid()) {
        const Matrix2 prod = fisher_metric(p) * inverse_metric(p);
        CHECK((prod - Matrix2::Identity()).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("dual coordinates are the potential gradient") {
    for (const NaturalPoint& p : standard_theta_grid()) {
        const DualPoint d = dual_coordinates(p);
        const double step = 1e-5;
        auto phi1 = [&p](double t) {
            return potential(NaturalPoint(t, p.theta2));
        };
        auto phi2 = [&p](double t) {
            return potential(NaturalPoint(p.theta1, t));
        };
        const double g1 =
            (phi1(p.theta1 + step) - phi1(p.theta1 - step)) / (2.0 * step);
        const double g2 =
            (phi2(p.theta2 + step) - phi2(p.theta2 - step)) / (2.0 * step);
        CHECK(std::abs(g1 - d.eta1) <= 1e-6);
        CHECK(std::abs(g2 - d.eta2) <= 1e-6);
    }
}

TEST_CASE("metric is the dual-coordinate Jacobian") {
    const double step = 1e-5;
    for (const NaturalPoint& p : standard_theta_grid()) {
        const Matrix2 h = fisher_metric(p);
        for (int j = 0; j < 2; ++j) {
            Vector2 tp(p.theta1, p.theta2), tm = tp;
            tp(j) += step;
            tm(j) -= step;
            const DualPoint dp = dual_coordinates(NaturalPoint(tp(0), tp(1)));
            const DualPoint dm = dual_coordinates(NaturalPoint(tm(0), tm(1)));
            CHECK(std::abs((dp.eta1 - dm.eta1) / (2 * step) - h(0, j)) <= 1e-6);
            CHECK(std::abs((dp.eta2 - dm.eta2) / (2 * step) - h(1, j)) <= 1e-6);
        }
    }
}

TEST_CASE("score has zero mean and reproduces the metric") {
    for (const NaturalPoint& p : standard_theta_grid()) {
        const Vector2 mean = score_mean(p);
        CHECK(mean.cwiseAbs().maxCoeff() <= 1e-10);
        const Matrix2 oracle = fisher_metric_oracle(p);
        CHECK((oracle - fisher_metric(p)).cwiseAbs().maxCoeff() <= 1e-8);
        // Information identity: -E[hessian] equals the score covariance.
        CHECK((log_likelihood_hessian(p) + fisher_metric(p))
                  .cwiseAbs()
                  .maxCoeff() <= 1e-12);
    }
}

TEST_CASE("score matches finite differences of the log likelihood") {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 20; ++trial) {
        const double t1 = -2.0 + 4.0 * (gen() >> 11) * 0x1.0p-53;
        const double t2 = -2.5 + 2.2 * (gen() >> 11) * 0x1.0p-53;
        const double u = -2.0 + 4.0 * (gen() >> 11) * 0x1.0p-53;
        const NaturalPoint p(t1, t2);
        const Vector2 s = score(u, p);
        const double x = std::exp(u), step = 1e-6;
        const double fd1 = (log_likelihood(x, NaturalPoint(t1 + step, t2)) -
                            log_likelihood(x, NaturalPoint(t1 - step, t2))) /
                           (2 * step);
        const double fd2 = (log_likelihood(x, NaturalPoint(t1, t2 + step)) -
                            log_likelihood(x, NaturalPoint(t1, t2 - step))) /
                           (2 * step);
        CHECK(std::abs(s(0) - fd1) <= 1e-6);
        CHECK(std::abs(s(1) - fd2) <= 1e-6);
    }
}

TEST_CASE("gauss-hermite rule integrates moments exactly") {
    const GaussHermite rule(40);
    const double mu = 0.7, sigma = 1.3;
    CHECK(rule.expect([](double) { return 1.0; }, mu, sigma) ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(rule.expect([](double u) { return u; }, mu, sigma) ==
          doctest::Approx(mu).epsilon(1e-13));
    CHECK(rule.expect([](double u) { return u * u; }, mu, sigma) ==
          doctest::Approx(mu * mu + sigma * sigma).epsilon(1e-13));
    CHECK_THROWS_AS(rule.expect([](double u) { return u; }, 0.0, 0.0),
                    std::domain_error);
}

TEST_CASE("e-connection coefficients vanish in natural coordinates") {
    for (const NaturalPoint& p : standard_theta_grid()) {
        const Christoffel2 gamma = christoffel_e(p);
        for (const auto& plane : gamma) {
            for (const auto& row : plane) {
                for (double x : row) CHECK(std::abs(x) <= 1e-8);
            }
        }
    }
}
