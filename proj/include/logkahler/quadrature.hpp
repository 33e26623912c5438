#pragma once

#include <array>
#include <functional>
#include <vector>

#include "logkahler/lognormal.hpp"

namespace logkahler {

struct QuadratureSpec {
    int order = 40;
};

/// Gauss-Hermite rule, nodes via Golub-Welsch on the Jacobi matrix.
/// expect() integrates f(u) against the Normal(mu, sigma^2) density in
/// u = log x, which is the exact change of variable for lognormal
/// expectations.
class GaussHermite {
public:
    explicit GaussHermite(int order);

    double expect(const std::function<double(double)>& f, double mu,
                  double sigma) const;

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

private:
    std::vector<double> nodes_;    // roots of H_n
    std::vector<double> weights_;  // normalized to sum to 1
};

/// Numerical Fisher metric via the score outer product E[s_i s_j],
/// independent of the closed form in fisher_metric().
Matrix2 fisher_metric_oracle(const NaturalPoint& p, const QuadratureSpec& q = {});

/// E[score] componentwise; vanishes for every valid point.
Vector2 score_mean(const NaturalPoint& p, const QuadratureSpec& q = {});

using Christoffel2 = std::array<std::array<std::array<double, 2>, 2>, 2>;

/// Exponential-connection coefficients Gamma_{ij,k} = E[(d_i d_j l)(d_k l)]
/// by quadrature; zero in natural coordinates.
Christoffel2 christoffel_e(const NaturalPoint& p, const QuadratureSpec& q = {});

}  // namespace logkahler
