#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "logkahler/dombrowski.hpp"
#include "logkahler/suites.hpp"

using namespace logkahler;

TEST_CASE("tangent state round trip and validation") {
    const TangentState s(1.0, -1.0, 0.5, -0.5);
    CHECK(TangentState::from_coords(s.coords()).coords() == s.coords());
    CHECK_THROWS_AS(TangentState(1.0, 0.5, 0.0, 0.0), std::domain_error);
}

TEST_CASE("natural structure blocks at a pinned state") {
    const TangentState s(1.0, -1.0, 0.3, -0.7);
    const KahlerStructure k = kahler_natural(s);
    // g = diag(h, h) with h = [[1/2, 1/2], [1/2, 1]].
    CHECK(k.g(0, 0) == doctest::Approx(0.5));
    CHECK(k.g(0, 1) == doctest::Approx(0.5));
    CHECK(k.g(1, 1) == doctest::Approx(1.0));
    CHECK(k.g(2, 2) == doctest::Approx(0.5));
    CHECK(k.g(3, 3) == doctest::Approx(1.0));
    CHECK(k.g.topRightCorner(2, 2).cwiseAbs().maxCoeff() == 0.0);
    // omega = [[0, h], [-h, 0]].
    CHECK(k.omega(0, 2) == doctest::Approx(0.5));
    CHECK(k.omega(0, 3) == doctest::Approx(0.5));
    CHECK(k.omega(1, 3) == doctest::Approx(1.0));
    CHECK(k.omega(2, 0) == doctest::Approx(-0.5));
    CHECK((k.J * k.J + Matrix4::Identity()).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("axioms hold at random states in both charts") {
    for (const TangentState& s : sample_states(17, 100)) {
        const auto nat = verify_structure(kahler_natural(s), 1e-10);
        const auto mix = verify_structure(kahler_mixed(s), 1e-10);
        CHECK(nat.pass);
        CHECK(mix.pass);
    }
}

TEST_CASE("omega agrees with g applied after J on random vectors") {
    const TangentState s(0.5, -1.5, -0.2, 0.8);
    const KahlerStructure k = kahler_natural(s);
    const Vector4 x(1.0, -2.0, 0.5, 3.0);
    const Vector4 y(-1.0, 0.5, 2.0, -0.5);
    const double lhs = x.transpose() * k.omega * y;
    const double rhs = (k.J * x).transpose() * k.g * y;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
}

TEST_CASE("determinant of the natural omega is the squared metric "
          "determinant") {
    for (const TangentState& s : sample_states(23, 25)) {
        const double t2 = s.theta.theta2;
        const double det_h = -1.0 / (4.0 * t2 * t2 * t2);
        const auto rep = verify_structure(kahler_natural(s), 1e-10);
        CHECK(rep.residuals.at("abs_det_omega") ==
              doctest::Approx(det_h * det_h).epsilon(1e-9));
    }
}

TEST_CASE("mixed omega is the constant canonical form") {
    const TangentState s(0.3, -0.8, 1.0, -1.0);
    const KahlerStructure k = kahler_mixed(s);
    Matrix4 canonical = Matrix4::Zero();
    canonical.topRightCorner(2, 2) = Matrix2::Identity();
    canonical.bottomLeftCorner(2, 2) = -Matrix2::Identity();
    CHECK((k.omega - canonical).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("chart change pulls the natural omega back to the mixed one") {
    const TangentState s(0.9, -1.2, 0.4, -0.6);
    const Matrix2 hinv = inverse_metric(s.theta);
    Matrix4 a = Matrix4::Zero();
    a.topLeftCorner(2, 2) = hinv;
    a.bottomRightCorner(2, 2) = Matrix2::Identity();
    const Matrix4 pulled =
        a.transpose() * kahler_natural(s).omega * a;
    CHECK((pulled - kahler_mixed(s).omega).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("omega is closed in both charts") {
    for (const TangentState& s : sample_states(31, 10)) {
        CHECK(closedness_residual(s, 1e-5, CoordinateSystem::Natural) <= 1e-6);
        CHECK(closedness_residual(s, 1e-5, CoordinateSystem::Mixed) <= 1e-6);
    }
}

TEST_CASE("complex coordinates of the tangent section") {
    const TangentState s(1.0, -1.0, 2.0, 3.0);
    const ComplexCoordinates c = to_siegel_jacobi(s);
    CHECK(c.z1 == std::complex<double>(1.0, 2.0));
    CHECK(c.z2 == std::complex<double>(-1.0, 3.0));
    CHECK(c.w1 == std::complex<double>(3.0, 1.0));   // -i z2
    CHECK(c.w2 == std::complex<double>(-2.0, 1.0));  // i z1
    const ComplexCoordinates ci =
        to_siegel_jacobi(s, SiegelConvention::IntroSection);
    CHECK(ci.w2 == c.z1);
}

TEST_CASE("verification report flags a broken structure") {
    KahlerStructure k = kahler_natural(TangentState(0.0, -0.5, 0.0, 0.0));
    k.J(0, 0) += 0.1;
    CHECK_FALSE(verify_structure(k, 1e-10).pass);
}
