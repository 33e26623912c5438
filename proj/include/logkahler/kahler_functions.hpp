#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "logkahler/dombrowski.hpp"

namespace logkahler {

using ScalarField = std::function<double(const Vector4&)>;

/// A member of the quadratic solution family of the flatness PDE system.
/// The anomalous theta2^2 coefficient is fixed to zero: it has no
/// matching thetadot2^2 partner and would violate the fourth PDE line.
struct KahlerCandidate {
    std::array<double, 6> alpha{};

    double operator()(const Vector4& x) const;
};

KahlerCandidate family_member(const std::array<double, 6>& alpha);

/// The eight left-hand sides of the flatness PDE system, by central
/// second differences: four wave-type lines f_titj - f_didj and four
/// mixed lines as printed (sums of symmetric cross partials).
std::array<double, 8> kahler_pde_residual(const ScalarField& f,
                                          const TangentState& s, double step);

/// Antisymmetric variant of the mixed conditions, each cross partial
/// minus itself with the differentiation order swapped; vacuously zero
/// for smooth candidates, kept as a stencil sanity check.
std::array<double, 4> kahler_pde_mixed_antisymmetric(const ScalarField& f,
                                                     const TangentState& s,
                                                     double step);

/// A self-map of the tangent bundle given by four component functions,
/// optionally with an analytic Jacobian.
struct BundleMap {
    std::array<ScalarField, 4> component;
    std::optional<std::function<Matrix4(const Vector4&)>> jacobian;

    Vector4 apply(const Vector4& x) const;
};

BundleMap identity_map();
BundleMap translation_map(const std::array<double, 4>& k);

/// Max modulus of the four Wirtinger derivatives
/// d/dzbar_k (phi1 + i phi3), d/dzbar_k (phi2 + i phi4), k = 1, 2.
double holomorphy_residual(const BundleMap& m, const TangentState& s,
                           double step);

/// max(||Dphi^T g(phi(s)) Dphi - g(s)||, ||Dphi J - J Dphi||) with g, J
/// from the natural-coordinates structure.
double isometry_residual(const BundleMap& m, const TangentState& s,
                         double step);

struct TranslationVerdict {
    std::array<double, 4> k{};
    double holomorphy = 0.0;
    double isometry = 0.0;
    bool holomorphy_pass = false;
    bool isometry_pass = false;
    std::string note;
};

struct TranslationReport {
    std::vector<TranslationVerdict> rows;
    double tolerance = 0.0;
};

/// Tabulates holomorphy/isometry residual maxima for each translation
/// over a grid of states; flags base translations whose pullback metric
/// does not reproduce g.
TranslationReport reproduce_translation_claim(
    const std::vector<TangentState>& states,
    const std::vector<std::array<double, 4>>& k_grid, double tol);

}  // namespace logkahler
