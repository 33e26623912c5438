#include "logkahler/kahler_functions.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace logkahler {

double KahlerCandidate::operator()(const Vector4& x) const {
    const double t1 = x(0), t2 = x(1), d1 = x(2), d2 = x(3);
    return 0.5 * alpha[0] * t1 * t1 +
           0.5 * (2.0 * alpha[1] * t2 - 2.0 * alpha[3] * d2 + 2.0 * alpha[4]) * t1 +
           0.5 * (2.0 * d1 * alpha[3] + 2.0 * alpha[5]) * t2 +
           0.5 * alpha[0] * d1 * d1 +
           0.5 * (2.0 * alpha[2] + 2.0 * alpha[1] * d2) * d1;
}

KahlerCandidate family_member(const std::array<double, 6>& alpha) {
    return KahlerCandidate{alpha};
}

namespace {

void check_step(double step) {
    if (!(step > 0.0)) {
        throw std::invalid_argument("finite-difference step must be > 0");
    }
}

void check_stencil(const TangentState& s, double step) {
    if (s.theta.theta2 + step >= kTheta2Guard) {
        throw std::domain_error("stencil leaves the theta2 < 0 half-space");
    }
}

}  // namespace

std::array<double, 8> kahler_pde_residual(const ScalarField& f,
                                          const TangentState& s, double step) {
    check_step(step);
    check_stencil(s, step);
    const Vector4 x = s.coords();
    auto d2 = [&](int i, int j) { return second_partial(f, x, i, j, step); };
    return {
        d2(0, 0) - d2(2, 2),  // wave-type, (1,1)
        d2(0, 1) - d2(2, 3),  // wave-type, (1,2)
        d2(1, 0) - d2(3, 2),  // wave-type, (2,1)
        d2(1, 1) - d2(3, 3),  // wave-type, (2,2)
        2.0 * d2(0, 2),       // mixed, (1,1)
        d2(0, 3) + d2(1, 2),  // mixed, (1,2)
        d2(1, 2) + d2(0, 3),  // mixed, (2,1)
        2.0 * d2(1, 3),       // mixed, (2,2)
    };
}

std::array<double, 4> kahler_pde_mixed_antisymmetric(const ScalarField& f,
                                                     const TangentState& s,
                                                     double step) {
    check_step(step);
    check_stencil(s, step);
    const Vector4 x = s.coords();
    auto d2 = [&](int i, int j) { return second_partial(f, x, i, j, step); };
    return {
        d2(0, 2) - d2(2, 0),
        d2(0, 3) - d2(3, 0),
        d2(1, 2) - d2(2, 1),
        d2(1, 3) - d2(3, 1),
    };
}

Vector4 BundleMap::apply(const Vector4& x) const {
    return {component[0](x), component[1](x), component[2](x), component[3](x)};
}

BundleMap identity_map() {
    BundleMap m;
    for (int i = 0; i < 4; ++i) {
        m.component[i] = [i](const Vector4& x) { return x(i); };
    }
    m.jacobian = [](const Vector4&) { return Matrix4::Identity(); };
    return m;
}

BundleMap translation_map(const std::array<double, 4>& k) {
    BundleMap m;
    for (int i = 0; i < 4; ++i) {
        m.component[i] = [i, k](const Vector4& x) { return x(i) + k[i]; };
    }
    m.jacobian = [](const Vector4&) { return Matrix4::Identity(); };
    return m;
}

namespace {

Matrix4 map_jacobian(const BundleMap& m, const Vector4& x, double step) {
    if (m.jacobian) return (*m.jacobian)(x);
    Matrix4 d;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            d(r, c) = central_diff(m.component[r], x, c, step);
        }
    }
    return d;
}

}  // namespace

double holomorphy_residual(const BundleMap& m, const TangentState& s,
                           double step) {
    check_step(step);
    check_stencil(s, step);
    const Vector4 x = s.coords();
    const std::complex<double> i(0.0, 1.0);
    double worst = 0.0;
    // Component pairs phi1 + i phi3 and phi2 + i phi4.
    for (int pair = 0; pair < 2; ++pair) {
        const auto& re = m.component[pair];
        const auto& im = m.component[pair + 2];
        for (int k = 0; k < 2; ++k) {
            // d/dzbar_k = (d/dtheta_k + i d/dthetadot_k) / 2
            const std::complex<double> d_theta =
                central_diff(re, x, k, step) +
                i * central_diff(im, x, k, step);
            const std::complex<double> d_dot =
                central_diff(re, x, k + 2, step) +
                i * central_diff(im, x, k + 2, step);
            worst = std::max(worst, std::abs(0.5 * (d_theta + i * d_dot)));
        }
    }
    return worst;
}

double isometry_residual(const BundleMap& m, const TangentState& s,
                         double step) {
    check_step(step);
    const Vector4 x = s.coords();
    const Vector4 y = m.apply(x);
    if (y(1) >= kTheta2Guard) {
        throw std::domain_error("isometry_residual: image leaves the manifold");
    }
    const Matrix4 d = map_jacobian(m, x, step);
    const KahlerStructure here = kahler_natural(s);
    const KahlerStructure there = kahler_natural(TangentState::from_coords(y));
    const double metric =
        (d.transpose() * there.g * d - here.g).cwiseAbs().maxCoeff();
    const double complex_structure =
        (d * here.J - here.J * d).cwiseAbs().maxCoeff();
    return std::max(metric, complex_structure);
}

TranslationReport reproduce_translation_claim(
    const std::vector<TangentState>& states,
    const std::vector<std::array<double, 4>>& k_grid, double tol) {
    TranslationReport report;
    report.tolerance = tol;
    for (const auto& k : k_grid) {
        TranslationVerdict v;
        v.k = k;
        const BundleMap m = translation_map(k);
        for (const auto& s : states) {
            v.holomorphy = std::max(v.holomorphy, holomorphy_residual(m, s, 1e-5));
            v.isometry = std::max(v.isometry, isometry_residual(m, s, 1e-5));
        }
        v.holomorphy_pass = v.holomorphy <= tol;
        v.isometry_pass = v.isometry <= tol;
        if (!v.isometry_pass && (k[0] != 0.0 || k[1] != 0.0)) {
            std::ostringstream note;
            note << "base translation (" << k[0] << ", " << k[1]
                 << "): pullback of the theta-dependent metric does not "
                    "reproduce g; max residual "
                 << v.isometry;
            v.note = note.str();
        }
        report.rows.push_back(std::move(v));
    }
    return report;
}

}  // namespace logkahler
