#pragma once

#include <complex>
#include <map>
#include <string>

#include "logkahler/finite_diff.hpp"
#include "logkahler/lognormal.hpp"

namespace logkahler {

/// A point (theta, thetadot) of the tangent bundle TS.
struct TangentState {
    NaturalPoint theta;
    double thetadot1 = 0.0;
    double thetadot2 = 0.0;

    TangentState(NaturalPoint p, double td1, double td2);
    TangentState(double t1, double t2, double td1, double td2)
        : TangentState(NaturalPoint(t1, t2), td1, td2) {}

    Vector4 coords() const {
        return {theta.theta1, theta.theta2, thetadot1, thetadot2};
    }
    static TangentState from_coords(const Vector4& c) {
        return TangentState(c(0), c(1), c(2), c(3));
    }
};

enum class CoordinateSystem { Natural, Mixed };

/// The almost-Hermitian triple at a tangent state.  omega is stored as
/// the literal printed matrix; compatibility with g(J.,.) is re-derived
/// in verify_structure as double-entry bookkeeping.
struct KahlerStructure {
    Matrix4 g;
    Matrix4 J;
    Matrix4 omega;
    CoordinateSystem coords;
};

KahlerStructure kahler_natural(const TangentState& s);
KahlerStructure kahler_mixed(const TangentState& s);

struct VerificationReport {
    std::map<std::string, double> residuals;
    bool pass = false;
    double tolerance = 0.0;
};

/// Residuals of every Kahler axiom: J^2 = -I, J-invariance of g,
/// omega = g(J.,.), antisymmetry, nondegeneracy, positivity of g.
VerificationReport verify_structure(const KahlerStructure& k, double tol);

/// The omega field as a function of the state, for derivative checks.
Matrix4 omega_field(const TangentState& s, CoordinateSystem coords);

/// Max cyclic-sum residual |d_k w_ij + d_i w_jk + d_j w_ki| over index
/// triples i<j<k, by central differences of the omega field.
double closedness_residual(const TangentState& s, double step,
                           CoordinateSystem coords);

enum class SiegelConvention { TangentSection, IntroSection };

/// Complexified tangent-bundle coordinates and their image in the
/// upper-half-plane model H x C.
struct ComplexCoordinates {
    std::complex<double> z1;
    std::complex<double> z2;
    std::complex<double> w1;
    std::complex<double> w2;
};

ComplexCoordinates to_siegel_jacobi(
    const TangentState& s,
    SiegelConvention convention = SiegelConvention::TangentSection);

}  // namespace logkahler
