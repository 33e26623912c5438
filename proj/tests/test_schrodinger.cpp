#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "logkahler/schrodinger.hpp"

using namespace logkahler;

namespace {
const LogGrid kGrid = LogGrid::uniform(-4.0, 4.0, 257);
const TangentState kRef(0.0, -0.5, 0.0, 0.0);
}  // namespace

TEST_CASE("grid construction") {
    CHECK(kGrid.size() == 257);
    CHECK(kGrid.du == doctest::Approx(8.0 / 256.0));
    CHECK(kGrid.u.front() == doctest::Approx(-4.0));
    CHECK(kGrid.u.back() == doctest::Approx(4.0));
    CHECK_THROWS_AS(LogGrid::uniform(1.0, 0.0, 10), std::invalid_argument);
}

TEST_CASE("wavefunction pinned values") {
    // At the standard-normal state and u = 0 only the normalizer
    // survives: (2 pi)^(-1/4).
    CHECK(std::abs(wavefunction_at(kRef, 0.0) -
                   Complex(std::pow(2.0 * M_PI, -0.25))) <= 1e-13);
    // At u = 1 the modulus picks up exp(-1/2) from c(x).
    CHECK(std::abs(wavefunction_at(kRef, 1.0)) ==
          doctest::Approx(std::exp(-0.5) * std::pow(2.0 * M_PI, -0.25))
              .epsilon(1e-12));
}

TEST_CASE("wavefunction overflow guard") {
    CHECK_THROWS_AS(wavefunction_at(TangentState(0.0, -0.5, -200.0, 0.0), 4.0),
                    std::domain_error);
}

TEST_CASE("multiplication operators act pointwise") {
    const WaveSamples psi = wavefunction(kRef, kGrid);
    const WaveSamples q = apply_quantization(JacobiElement::Q(), psi);
    const WaveSamples r = apply_quantization(JacobiElement::R(), psi);
    for (std::size_t k = 0; k < kGrid.size(); ++k) {
        CHECK(std::abs(q.values[k] - kGrid.u[k] * psi.values[k]) <= 1e-14);
        CHECK(std::abs(r.values[k] + 0.25 * psi.values[k]) <= 1e-14);
    }
}

TEST_CASE("derivative stencils are exact on low-degree monomials") {
    // H acting on v(u) = u gives 2i(u + u/2) = 3i u, and the 4th-order
    // stencils are exact for it, boundaries included.
    WaveSamples v;
    v.grid = kGrid;
    for (double u : kGrid.u) v.values.emplace_back(u, 0.0);
    const WaveSamples h = apply_quantization(JacobiElement::H(), v);
    for (std::size_t k = 0; k < kGrid.size(); ++k) {
        CHECK(std::abs(h.values[k] - Complex(0.0, 3.0 * kGrid.u[k])) <= 1e-10);
    }
}

TEST_CASE("momentum operator converges at fourth order on plane waves") {
    const double k_wave = 2.0;
    auto worst_error = [&](int n) {
        const LogGrid grid = LogGrid::uniform(-4.0, 4.0, n);
        WaveSamples v;
        v.grid = grid;
        for (double u : grid.u) {
            v.values.push_back(std::exp(Complex(0.0, k_wave * u)));
        }
        const WaveSamples d = apply_quantization(JacobiElement::P(), v);
        double worst = 0.0;
        for (std::size_t j = 2; j + 2 < grid.size(); ++j) {
            worst = std::max(worst,
                             std::abs(d.values[j] - k_wave * v.values[j]));
        }
        return worst;
    };
    const double order =
        std::log2(worst_error(129) / worst_error(257));
    CHECK(order >= 3.5);
    CHECK(order <= 4.5);
}

TEST_CASE("grid too small for derivative operators") {
    const LogGrid tiny = LogGrid::uniform(-1.0, 1.0, 6);
    const WaveSamples psi = wavefunction(kRef, tiny);
    CHECK_THROWS_AS(apply_quantization(JacobiElement::P(), psi),
                    std::invalid_argument);
    CHECK_NOTHROW(apply_quantization(JacobiElement::Q(), psi));
}

TEST_CASE("printed actions at pinned points") {
    const WaveSamples p = closed_form_action(JacobiElement::P(), kRef, kGrid);
    const WaveSamples psi = wavefunction(kRef, kGrid);
    const std::size_t mid = 128;  // u = 0
    CHECK(std::abs(p.values[mid] - 0.5 * psi.values[mid]) <= 1e-13);
    const WaveSamples f = closed_form_action(JacobiElement::F(), kRef, kGrid);
    const std::size_t at2 = 192;  // u = 2
    CHECK(std::abs(f.values[at2] + 4.0 * psi.values[at2]) <= 1e-13);
}

TEST_CASE("operator discrepancy splits by operator type") {
    CHECK(operator_discrepancy(JacobiElement::F(), kRef, kGrid) <= 1e-12);
    CHECK(operator_discrepancy(JacobiElement::Q(), kRef, kGrid) <= 1e-12);
    CHECK(operator_discrepancy(JacobiElement::R(), kRef, kGrid) <= 1e-12);
    // The derivative operators genuinely disagree with the printed
    // closed forms; the gap for P is (i - 1)/2 - (-z2 + 2 z1 u)/2
    // times the wavefunction.
    const double p_gap = operator_discrepancy(JacobiElement::P(), kRef, kGrid);
    CHECK(p_gap > 1e-3);
    double expected = 0.0;
    const Complex z1(0.0, 0.0), z2(-0.5, 0.0);
    for (std::size_t k = 2; k + 2 < kGrid.size(); ++k) {
        const double u = kGrid.u[k];
        const Complex gap =
            0.5 * Complex(-1.0, 1.0) - 0.5 * (-z2 + 2.0 * z1 * u);
        expected = std::max(expected,
                            std::abs(gap) * std::abs(wavefunction_at(kRef, u)));
    }
    CHECK(p_gap == doctest::Approx(expected).epsilon(1e-6));
    CHECK(operator_discrepancy(JacobiElement::G(), kRef, kGrid) > 1e-3);
    CHECK(operator_discrepancy(JacobiElement::H(), kRef, kGrid) > 1e-3);
}

TEST_CASE("xi coefficient pinned cases") {
    // A constant curve with zero fiber makes every state-dependent term
    // vanish.
    const auto still = integrate_flow(JacobiElement::F(),
                                      TangentState(1, -1, 0, 0), 0.01, 1e-3);
    SchrodingerParams p;
    CHECK(std::abs(xi_coefficient(still, 3, 1.0, p)) <= 1e-14);
    p.lambda[4] = 1.0;
    CHECK(std::abs(xi_coefficient(still, 3, 1.0, p) - Complex(0.25)) <=
          1e-14);
    p.beta[4] = -1.0;
    CHECK_THROWS_AS(xi_coefficient(still, 3, 1.0, p), std::domain_error);
}

TEST_CASE("proof-section xi variant differs but stays finite") {
    const auto q = integrate_flow(JacobiElement::Q(), kRef, 0.05, 1e-3);
    SchrodingerParams p;
    p.lambda[1] = 1.0;
    const Complex a = xi_coefficient(q, 10, 1.5, p);
    p.xi_variant = XiVariant::Alternate;
    const Complex b = xi_coefficient(q, 10, 1.5, p);
    CHECK(std::isfinite(std::abs(a)));
    CHECK(std::isfinite(std::abs(b)));
    CHECK(std::abs(a - b) > 1e-6);
}

TEST_CASE("hamiltonian density pinned values") {
    SchrodingerParams p;
    CHECK(std::abs(hamiltonian_density(kRef, 1.0, p, 0.0)) == 0.0);
    p.lambda[4] = 1.0;
    CHECK(std::abs(hamiltonian_density(kRef, 1.0, p, 0.0) -
                   Complex(-0.25)) <= 1e-15);
    SchrodingerParams p1;
    p1.lambda[0] = 1.0;
    CHECK(std::abs(hamiltonian_density(kRef, 2.0, p1, 0.0) -
                   Complex(-4.0)) <= 1e-15);
}

TEST_CASE("constant curve has zero residual") {
    const auto still = integrate_flow(JacobiElement::F(),
                                      TangentState(1, -1, 0, 0), 0.01, 1e-3);
    const auto field = schrodinger_residual(still, kGrid,
                                            SchrodingerParams::calibrated());
    // Roundoff only: the stencil cancels identical samples to ~1e-13
    // after division by the step.
    CHECK(field.max_eq23() <= 1e-12);
}

TEST_CASE("calibrated flags close the equation on base-constant flows") {
    for (const char* name : {"Q", "H"}) {
        const auto curve = integrate_flow(JacobiElement::from_name(name),
                                          kRef, 0.1, 1e-3);
        const auto field = schrodinger_residual(
            curve, kGrid, SchrodingerParams::calibrated());
        CHECK(field.max_eq23() <= 1e-6);
    }
}

TEST_CASE("literal flags leave a visible residual") {
    const auto curve = integrate_flow(JacobiElement::Q(), kRef, 0.1, 1e-3);
    const auto field = schrodinger_residual(
        curve, kGrid, SchrodingerParams::literal());
    CHECK(field.max_eq23() > 1e-3);
}

TEST_CASE("residual csv has the documented columns") {
    const auto curve = integrate_flow(JacobiElement::Q(), kRef, 0.01, 1e-3);
    const auto field = schrodinger_residual(
        curve, LogGrid::uniform(-1.0, 1.0, 9),
        SchrodingerParams::calibrated());
    std::ostringstream os;
    write_residual_csv(os, field);
    CHECK(os.str().rfind("s,u,abs_residual_eq23,abs_residual_eq21,"
                         "hamiltonian_re,hamiltonian_im\n", 0) == 0);
}
