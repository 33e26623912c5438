#include "logkahler/schrodinger.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace logkahler {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

using CVec = std::vector<Complex>;

void require_derivative_grid(const LogGrid& g) {
    if (g.size() < 8) {
        throw std::invalid_argument(
            "grid too small for derivative operators (need >= 8 points)");
    }
}

// 4th-order first derivative; one-sided at the two boundary pairs.
CVec first_derivative(const CVec& v, double du) {
    const std::size_t n = v.size();
    CVec d(n);
    const double s = 1.0 / (12.0 * du);
    d[0] = s * (-25.0 * v[0] + 48.0 * v[1] - 36.0 * v[2] + 16.0 * v[3] -
                3.0 * v[4]);
    d[1] = s * (-3.0 * v[0] - 10.0 * v[1] + 18.0 * v[2] - 6.0 * v[3] + v[4]);
    for (std::size_t i = 2; i + 2 < n; ++i) {
        d[i] = s * (v[i - 2] - 8.0 * v[i - 1] + 8.0 * v[i + 1] - v[i + 2]);
    }
    d[n - 2] = -s * (-3.0 * v[n - 1] - 10.0 * v[n - 2] + 18.0 * v[n - 3] -
                     6.0 * v[n - 4] + v[n - 5]);
    d[n - 1] = -s * (-25.0 * v[n - 1] + 48.0 * v[n - 2] - 36.0 * v[n - 3] +
                     16.0 * v[n - 4] - 3.0 * v[n - 5]);
    return d;
}

// 4th-order second derivative; one-sided at the two boundary pairs.
CVec second_derivative(const CVec& v, double du) {
    const std::size_t n = v.size();
    CVec d(n);
    const double s = 1.0 / (12.0 * du * du);
    d[0] = s * (45.0 * v[0] - 154.0 * v[1] + 214.0 * v[2] - 156.0 * v[3] +
                61.0 * v[4] - 10.0 * v[5]);
    d[1] = s * (10.0 * v[0] - 15.0 * v[1] - 4.0 * v[2] + 14.0 * v[3] -
                6.0 * v[4] + v[5]);
    for (std::size_t i = 2; i + 2 < n; ++i) {
        d[i] = s * (-v[i - 2] + 16.0 * v[i - 1] - 30.0 * v[i] +
                    16.0 * v[i + 1] - v[i + 2]);
    }
    d[n - 2] = s * (10.0 * v[n - 1] - 15.0 * v[n - 2] - 4.0 * v[n - 3] +
                    14.0 * v[n - 4] - 6.0 * v[n - 5] + v[n - 6]);
    d[n - 1] = s * (45.0 * v[n - 1] - 154.0 * v[n - 2] + 214.0 * v[n - 3] -
                    156.0 * v[n - 4] + 61.0 * v[n - 5] - 10.0 * v[n - 6]);
    return d;
}

Complex z1_of(const TangentState& s) {
    return {s.theta.theta1, s.thetadot1};
}
Complex z2_of(const TangentState& s) {
    return {s.theta.theta2, s.thetadot2};
}

}  // namespace

LogGrid LogGrid::uniform(double lo, double hi, int n) {
    if (n < 2 || !(hi > lo)) {
        throw std::invalid_argument("grid needs n >= 2 and hi > lo");
    }
    LogGrid g;
    g.du = (hi - lo) / (n - 1);
    g.u.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) g.u[static_cast<std::size_t>(k)] = lo + k * g.du;
    return g;
}

SchrodingerParams SchrodingerParams::calibrated() { return {}; }

SchrodingerParams SchrodingerParams::literal() {
    SchrodingerParams p;
    p.flags.sign_z2_term = -1.0;
    p.flags.include_potential_drift = false;
    p.flags.base_velocity_from_curve = false;
    return p;
}

Complex wavefunction_at(const TangentState& s, double u, bool prefactor_half) {
    const Complex i(0.0, 1.0);
    const Complex c(-u, -u);
    const Complex exponent =
        c - i * z2_of(s) * u + i * z1_of(s) * u * u - potential(s.theta);
    const Complex scaled = prefactor_half ? 0.5 * exponent : exponent;
    if (scaled.real() > 700.0) {
        throw std::domain_error("wavefunction exponent overflow");
    }
    return std::exp(scaled);
}

WaveSamples wavefunction(const TangentState& s, const LogGrid& grid) {
    WaveSamples w;
    w.grid = grid;
    w.values.reserve(grid.size());
    for (double u : grid.u) w.values.push_back(wavefunction_at(s, u));
    return w;
}

WaveSamples apply_quantization(const JacobiElement& L, const WaveSamples& w) {
    const std::size_t n = w.values.size();
    const bool needs_first = L.p != 0.0 || L.h != 0.0;
    const bool needs_second = L.g != 0.0;
    if (needs_first || needs_second) require_derivative_grid(w.grid);

    CVec d1, d2;
    if (needs_first) d1 = first_derivative(w.values, w.grid.du);
    if (needs_second) d2 = second_derivative(w.values, w.grid.du);

    const Complex i(0.0, 1.0);
    WaveSamples out;
    out.grid = w.grid;
    out.values.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double u = w.grid.u[k];
        const Complex v = w.values[k];
        Complex r = L.f * (-u * u) * v + L.q * u * v + L.r * (-0.25) * v;
        if (needs_first) {
            r += L.p * (-i) * d1[k];
            r += L.h * 2.0 * i * (u * d1[k] + 0.5 * v);
        }
        if (needs_second) r += L.g * (-d2[k]);
        out.values[k] = r;
    }
    return out;
}

WaveSamples closed_form_action(const JacobiElement& L, const TangentState& s,
                               const LogGrid& grid) {
    const Complex i(0.0, 1.0);
    const Complex z1 = z1_of(s), z2 = z2_of(s);
    WaveSamples out = wavefunction(s, grid);
    for (std::size_t k = 0; k < out.values.size(); ++k) {
        const double u = grid.u[k];
        const Complex a = -i * z2 + 2.0 * i * z1 * u;
        Complex factor = L.f * (-u * u) + L.q * u + L.r * (-0.25);
        factor += L.p * (-z2 + 2.0 * z1 * u);
        factor += L.g * (-(2.0 * i * z1 + a * a));
        factor += L.h * (2.0 * u * z2 - 4.0 * z1 * u * u + i);
        out.values[k] *= factor;
    }
    return out;
}

double operator_discrepancy(const JacobiElement& L, const TangentState& s,
                            const LogGrid& grid) {
    const WaveSamples psi = wavefunction(s, grid);
    const WaveSamples lhs = apply_quantization(L, psi);
    const WaveSamples rhs = closed_form_action(L, s, grid);
    double worst = 0.0;
    for (std::size_t k = 2; k + 2 < grid.size(); ++k) {
        worst = std::max(worst, std::abs(lhs.values[k] - rhs.values[k]));
    }
    return worst;
}

Complex xi_coefficient(const SpectralCurve& c, std::size_t k, double u,
                       const SchrodingerParams& p) {
    if (k >= c.states.size()) {
        throw std::invalid_argument("curve sample index out of range");
    }
    const Vector4& x = c.states[k];
    const Vector4& v = c.velocities[k];
    const double t1 = x(0), t2 = x(1), d1 = x(2), d2 = x(3);
    const double dd1 = v(2), dd2 = v(3);  // fiber velocity = second derivative
    const double l1 = p.lambda[0], l2 = p.lambda[1], l3 = p.lambda[2],
                 l4 = p.lambda[3], l5 = p.lambda[4];
    const Complex i(0.0, 1.0);
    const double u2 = u * u;

    if (p.xi_variant == XiVariant::Standard) {
        if (std::abs(p.beta[4] + u) < 1e-9) {
            throw std::domain_error("xi pole: beta5 + log(x) vanishes");
        }
        const Complex n1 = -4.0 * i * dd1 * u2 - 4.0 * i * u * dd2 +
                           4.0 * l1 * u2 + 8.0 * i * l2 * d1 * t2 + l5 -
                           4.0 * i * l3;
        const Complex n2 = 16.0 * l3 * t1 * u2 - 8.0 * l4 * t1 * u +
                           8.0 * l2 * t1 * t2 + 8.0 * i * l2 * t1 +
                           4.0 * i * l4 * d2 - 8.0 * l2 * d2 * d1;
        const Complex n3 = 2.0 * l2 * d2 * d2 + 8.0 * l2 * d1 +
                           4.0 * l4 * t2 - 8.0 * l2 * d1 - 2.0 * l2 * t2 * t2 -
                           8.0 * l2 * t1 * t1 - 4.0 * d1 * u2 - 4.0 * d2 * u;
        const Complex n4 = -8.0 * l3 * Complex(t2, d2) * u +
                           8.0 * l2 * t1 * d2 - 16.0 * i * l2 * t1 * d1 +
                           16.0 * i * l3 * d1 * u2 - 8.0 * i * l4 * d2 -
                           4.0 * i * l2 * t2 * d2;
        const double beta_block = -4.0 * l1 * p.beta[0] - 8.0 * l2 * p.beta[1] -
                                  4.0 * l3 * p.beta[2] - 4.0 * l4 * p.beta[3] -
                                  4.0 * l5 * p.beta[5];
        const double den = 4.0 * (p.beta[4] + u);
        const Complex psi = wavefunction_at(TangentState::from_coords(x), u);
        return (n1 + n2 + n3 + n4) / den + beta_block / (den * psi);
    }

    // Proof-section variant: the numerator differs term by term and the
    // denominator carries the wavefunction value itself.
    const Complex psi = wavefunction_at(TangentState::from_coords(x), u);
    const Complex den = 4.0 * (p.beta[4] + u * psi);
    if (std::abs(den) < 1e-9) {
        throw std::domain_error("xi pole: beta5 + log(x) Psi vanishes");
    }
    const Complex g1 = l5 - 4.0 * i * l2 * t2 * d2 - 4.0 * i * l3 +
                       8.0 * t2 * u - 8.0 * t1 * u2 - 8.0 * l2 * d2;
    const Complex g2 = -2.0 * l2 * t2 * t2 - 8.0 * l2 * t1 * t1 -
                       8.0 * l3 * Complex(t2, d2) + 8.0 * l2 * d1 * d1 +
                       2.0 * l2 * d2 * d2 + 4.0 * l4 * t2;
    const Complex g3 = 4.0 * l1 * u2 - 8.0 * l2 * d1 * d2 +
                       8.0 * l2 * t2 * t1 + 4.0 * i * l4 * d2 -
                       8.0 * i * l3 * d1 * u2;
    const Complex g4 = 8.0 * i * d2 * u + 8.0 * i * l2 * t1 -
                       8.0 * l4 * t1 * u + 16.0 * l3 * t1 * u2;
    const Complex g5 = 8.0 * i * l2 * t2 * d1 - 8.0 * i * l2 * t1 * d1 +
                       16.0 * i * l3 * d1 * u2;
    const double beta_block = -4.0 * l4 * p.beta[3] - 4.0 * l5 * p.beta[5] -
                              4.0 * l3 * p.beta[2] - 4.0 * l2 * p.beta[1];
    return ((g1 + g2 + g3 + g4 + g5) * psi + beta_block) / den;
}

Complex hamiltonian_density(const TangentState& s, double u,
                            const SchrodingerParams& p, Complex xi_value) {
    const Complex i(0.0, 1.0);
    const Complex z1 = z1_of(s), z2 = z2_of(s);
    const Complex a = -i * z2 + 2.0 * i * z1 * u;
    return -p.lambda[0] * u * u - p.lambda[1] * (2.0 * i * z1 + a * a) +
           p.lambda[2] * (2.0 * u * z2 - 4.0 * z1 * u * u + i) +
           p.lambda[3] * (-z2 + 2.0 * z1 * u) + xi_value * u -
           0.25 * p.lambda[4];
}

namespace {

double finite_max(const std::vector<std::vector<double>>& field) {
    double worst = 0.0;
    for (const auto& row : field) {
        for (double x : row) {
            if (std::isfinite(x)) worst = std::max(worst, x);
        }
    }
    return worst;
}

double finite_mean(const std::vector<std::vector<double>>& field) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& row : field) {
        for (double x : row) {
            if (std::isfinite(x)) {
                sum += x;
                ++count;
            }
        }
    }
    return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

}  // namespace

double ResidualField::max_eq23() const { return finite_max(abs_eq23); }
double ResidualField::max_eq21() const { return finite_max(abs_eq21); }
double ResidualField::mean_eq23() const { return finite_mean(abs_eq23); }
double ResidualField::mean_eq21() const { return finite_mean(abs_eq21); }

ResidualField schrodinger_residual(const SpectralCurve& c,
                                   const LogGrid& grid,
                                   const SchrodingerParams& p) {
    const std::size_t n = c.states.size();
    if (n < 5) {
        throw std::invalid_argument(
            "curve too short for the derivative stencil (need >= 5 samples)");
    }
    const double ds = c.s[1] - c.s[0];
    const std::size_t m = grid.size();
    const Complex i(0.0, 1.0);
    const bool half = p.flags.psi_prefactor_half;

    // Wavefunction samples along the whole curve, then residuals on the
    // interior where the central stencil fits.
    std::vector<CVec> wave(n, CVec(m));
    for (std::size_t k = 0; k < n; ++k) {
        const TangentState state = TangentState::from_coords(c.states[k]);
        for (std::size_t j = 0; j < m; ++j) {
            wave[k][j] = wavefunction_at(state, grid.u[j], half);
        }
    }

    ResidualField out;
    out.grid = grid;
    out.flags = p.flags;
    for (std::size_t k = 2; k + 2 < n; ++k) {
        const TangentState state = TangentState::from_coords(c.states[k]);
        const Vector4& x = c.states[k];
        const Vector4& v = c.velocities[k];
        const Complex z1p(p.flags.base_velocity_from_curve ? v(0) : x(2),
                          v(2));
        const Complex z2p(p.flags.base_velocity_from_curve ? v(1) : x(3),
                          v(3));
        const DualPoint eta = dual_coordinates(state.theta);
        const double phi_rate = eta.eta1 * v(0) + eta.eta2 * v(1);
        const double beta_sum = p.lambda[0] * p.beta[0] +
                                p.lambda[1] * p.beta[1] +
                                p.lambda[2] * p.beta[2] +
                                p.lambda[3] * p.beta[3] +
                                p.lambda[4] * p.beta[5];

        std::vector<double> row23(m), row21(m);
        std::vector<Complex> rowh(m);
        for (std::size_t j = 0; j < m; ++j) {
            const double u = grid.u[j];
            const Complex lhs = i *
                                (wave[k - 2][j] - 8.0 * wave[k - 1][j] +
                                 8.0 * wave[k + 1][j] - wave[k + 2][j]) /
                                (12.0 * ds);
            Complex rhs23 = 0.5 *
                            (-u * u * z1p + p.flags.sign_z2_term * u * z2p) *
                            wave[k][j];
            if (p.flags.include_potential_drift) {
                rhs23 += -0.5 * i * phi_rate * wave[k][j];
            }
            row23[j] = std::abs(lhs - rhs23);

            try {
                const Complex xi = xi_coefficient(c, k, u, p);
                const Complex ham = hamiltonian_density(state, u, p, xi);
                const Complex rhs21 =
                    0.5 * ham * wave[k][j] +
                    0.5 * (beta_sum + xi * p.beta[4]);
                row21[j] = std::abs(lhs - rhs21);
                rowh[j] = ham;
            } catch (const std::domain_error&) {
                row21[j] = kNaN;
                rowh[j] = {kNaN, kNaN};
            }
        }
        out.s.push_back(c.s[k]);
        out.abs_eq23.push_back(std::move(row23));
        out.abs_eq21.push_back(std::move(row21));
        out.hamiltonian.push_back(std::move(rowh));
    }
    return out;
}

void write_residual_csv(std::ostream& out, const ResidualField& f) {
    out << "s,u,abs_residual_eq23,abs_residual_eq21,hamiltonian_re,"
           "hamiltonian_im\n";
    for (std::size_t k = 0; k < f.s.size(); ++k) {
        for (std::size_t j = 0; j < f.grid.size(); ++j) {
            out << f.s[k] << ',' << f.grid.u[j] << ',' << f.abs_eq23[k][j]
                << ',' << f.abs_eq21[k][j] << ',' << f.hamiltonian[k][j].real()
                << ',' << f.hamiltonian[k][j].imag() << '\n';
        }
    }
}

}  // namespace logkahler
