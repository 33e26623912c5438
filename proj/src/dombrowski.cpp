#include "logkahler/dombrowski.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace logkahler {

TangentState::TangentState(NaturalPoint p, double td1, double td2)
    : theta(p), thetadot1(td1), thetadot2(td2) {
    if (!(std::isfinite(td1) && std::isfinite(td2))) {
        throw std::domain_error("TangentState: fiber coordinates must be finite");
    }
}

namespace {

Matrix4 block_diag(const Matrix2& a, const Matrix2& b) {
    Matrix4 m = Matrix4::Zero();
    m.topLeftCorner<2, 2>() = a;
    m.bottomRightCorner<2, 2>() = b;
    return m;
}

Matrix4 block_anti(const Matrix2& upper_right, const Matrix2& lower_left) {
    Matrix4 m = Matrix4::Zero();
    m.topRightCorner<2, 2>() = upper_right;
    m.bottomLeftCorner<2, 2>() = lower_left;
    return m;
}

// Invert the dual chart: theta from (eta1, eta2).
NaturalPoint point_from_dual(double eta1, double eta2) {
    const double var = eta2 - eta1 * eta1;
    if (!(var > 0.0)) {
        throw std::domain_error("point_from_dual: eta2 - eta1^2 must be > 0");
    }
    return NaturalPoint(eta1 / var, -1.0 / (2.0 * var));
}

}  // namespace

KahlerStructure kahler_natural(const TangentState& s) {
    const Matrix2 h = fisher_metric(s.theta);
    KahlerStructure k;
    k.coords = CoordinateSystem::Natural;
    k.g = block_diag(h, h);
    k.J = block_anti(-Matrix2::Identity(), Matrix2::Identity());
    k.omega = block_anti(h, -h);
    return k;
}

KahlerStructure kahler_mixed(const TangentState& s) {
    const Matrix2 h = fisher_metric(s.theta);
    const Matrix2 hinv = inverse_metric(s.theta);
    KahlerStructure k;
    k.coords = CoordinateSystem::Mixed;
    k.g = block_diag(hinv, h);
    k.J = block_anti(-h, hinv);
    k.omega = block_anti(Matrix2::Identity(), -Matrix2::Identity());
    return k;
}

VerificationReport verify_structure(const KahlerStructure& k, double tol) {
    VerificationReport r;
    r.tolerance = tol;
    const Matrix4 I = Matrix4::Identity();
    r.residuals["J2_plus_I"] = (k.J * k.J + I).cwiseAbs().maxCoeff();
    r.residuals["JtgJ_minus_g"] =
        (k.J.transpose() * k.g * k.J - k.g).cwiseAbs().maxCoeff();
    // omega(X,Y) = g(JX,Y) realized entrywise as J^T g.
    r.residuals["omega_vs_gJ"] =
        (k.omega - k.J.transpose() * k.g).cwiseAbs().maxCoeff();
    r.residuals["omega_antisym"] =
        (k.omega + k.omega.transpose()).cwiseAbs().maxCoeff();
    const double det = k.omega.determinant();
    r.residuals["abs_det_omega"] = std::abs(det);
    Eigen::SelfAdjointEigenSolver<Matrix4> es(k.g);
    const double min_eig = es.eigenvalues().minCoeff();
    r.residuals["min_eig_g"] = min_eig;
    r.pass = r.residuals["J2_plus_I"] <= tol &&
             r.residuals["JtgJ_minus_g"] <= tol &&
             r.residuals["omega_vs_gJ"] <= tol &&
             r.residuals["omega_antisym"] <= tol && std::abs(det) > 0.0 &&
             min_eig > 0.0;
    return r;
}

Matrix4 omega_field(const TangentState& s, CoordinateSystem coords) {
    return coords == CoordinateSystem::Natural ? kahler_natural(s).omega
                                               : kahler_mixed(s).omega;
}

double closedness_residual(const TangentState& s, double step,
                           CoordinateSystem coords) {
    if (!(step > 0.0)) {
        throw std::invalid_argument("closedness_residual: step must be > 0");
    }
    const bool natural = coords == CoordinateSystem::Natural;
    Vector4 c = s.coords();
    if (!natural) {
        const DualPoint d = dual_coordinates(s.theta);
        c(0) = d.eta1;
        c(1) = d.eta2;
    }
    // omega as a field over the active chart.
    auto field = [&](const Vector4& x) -> Matrix4 {
        if (natural) return omega_field(TangentState::from_coords(x), coords);
        const NaturalPoint p = point_from_dual(x(0), x(1));
        return omega_field(TangentState(p, x(2), x(3)), coords);
    };
    // Keep the theta2 (resp. log-variance) stencil inside the half-space;
    // shrink once, then give up.
    auto stencil_ok = [&](double h) {
        if (natural) return c(1) + h < kTheta2Guard;
        return c(1) - h - c(0) * c(0) > 0.0;  // variance stays positive
    };
    if (!stencil_ok(step)) {
        const double shrunk =
            natural ? 0.5 * (kTheta2Guard - c(1)) : 0.25 * (c(1) - c(0) * c(0));
        if (!(shrunk > 0.0) || !stencil_ok(shrunk)) {
            throw std::domain_error(
                "closedness_residual: stencil leaves the manifold domain");
        }
        step = shrunk;
    }
    std::array<Matrix4, 4> deriv;
    for (int i = 0; i < 4; ++i) {
        Vector4 xp = c, xm = c;
        xp(i) += step;
        xm(i) -= step;
        deriv[i] = (field(xp) - field(xm)) / (2.0 * step);
    }
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            for (int k = j + 1; k < 4; ++k) {
                const double cyc =
                    deriv[k](i, j) + deriv[i](j, k) + deriv[j](k, i);
                worst = std::max(worst, std::abs(cyc));
            }
        }
    }
    return worst;
}

ComplexCoordinates to_siegel_jacobi(const TangentState& s,
                                    SiegelConvention convention) {
    const std::complex<double> i(0.0, 1.0);
    ComplexCoordinates c;
    c.z1 = {s.theta.theta1, s.thetadot1};
    c.z2 = {s.theta.theta2, s.thetadot2};
    c.w1 = -i * c.z2;
    c.w2 = convention == SiegelConvention::TangentSection ? i * c.z1 : c.z1;
    return c;
}

}  // namespace logkahler
