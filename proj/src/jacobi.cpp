#include "logkahler/jacobi.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace logkahler {

std::vector<std::pair<std::string, JacobiElement>> JacobiElement::basis() {
    return {{"F", F()}, {"G", G()}, {"H", H()},
            {"P", P()}, {"Q", Q()}, {"R", R()}};
}

JacobiElement JacobiElement::from_name(const std::string& name) {
    for (const auto& [label, elem] : basis()) {
        if (label == name) return elem;
    }
    throw std::invalid_argument("unknown algebra element '" + name + "'");
}

Observable psi(const JacobiElement& L) {
    Observable obs;
    // Per-generator values: F -> 0, G -> t2^2/2 + t2 + d1 + d2^2/2,
    // H -> t1, P -> t2 + d1, Q -> t2, R -> -1/4.
    obs.value = [L](const Vector4& x) {
        const double t1 = x(0), t2 = x(1), d1 = x(2), d2 = x(3);
        double v = 0.0;
        v += L.g * (0.5 * t2 * t2 + t2 + d1 + 0.5 * d2 * d2);
        v += L.h * t1;
        v += L.p * (t2 + d1);
        v += L.q * t2;
        v += L.r * (-0.25);
        return v;
    };
    obs.gradient = [L](const Vector4& x) {
        const double t2 = x(1), d2 = x(3);
        Vector4 grad = Vector4::Zero();
        grad(1) += L.g * (t2 + 1.0);
        grad(2) += L.g;
        grad(3) += L.g * d2;
        grad(0) += L.h;
        grad(1) += L.p;
        grad(2) += L.p;
        grad(1) += L.q;
        return grad;
    };
    return obs;
}

Vector4 hamiltonian_field(const Observable& f, const TangentState& s) {
    const Matrix2 hinv = inverse_metric(s.theta);
    const Vector4 grad = f.gradient(s.coords());
    const Vector2 grad_theta(grad(0), grad(1));
    const Vector2 grad_fiber(grad(2), grad(3));
    const Vector2 base = hinv * grad_fiber;
    const Vector2 fiber = -(hinv * grad_theta);
    return {base(0), base(1), fiber(0), fiber(1)};
}

Vector4 closed_form_field(const JacobiElement& L, const TangentState& s) {
    const double t1 = s.theta.theta1;
    const double t2 = s.theta.theta2;
    const double d2 = s.thetadot2;
    Vector4 v = Vector4::Zero();
    // F and R are constants of the moment map; their fields vanish.
    v += L.p * Vector4{2 * t1 * t1 - 2 * t2, 2 * t1 * t2,
                       -2 * t1 * t2, -2 * t2 * t2};
    v += L.g * Vector4{2 * t1 * t1 - 2 * t2 + 2 * t1 * t2 * d2,
                       2 * t1 * t2 + 2 * t2 * t2 * d2,
                       -2 * t1 * t2 * (t2 + 1.0),
                       -2 * t2 * t2 * (t2 + 1.0)};
    v += L.h * Vector4{0, 0, -2 * t1 * t1 + 2 * t2, -2 * t1 * t2};
    v += L.q * Vector4{0, 0, -2 * t1 * t2, -2 * t2 * t2};
    return v;
}

namespace {

Vector4 field_or_throw(const Observable& obs, const Vector4& x, double s) {
    if (!(x(1) < kTheta2Guard)) {
        std::ostringstream msg;
        msg << "flow left the manifold domain (theta2 = " << x(1)
            << ") near s = " << s;
        throw FlowDomainError(msg.str(), s);
    }
    if (!x.allFinite()) {
        std::ostringstream msg;
        msg << "flow diverged near s = " << s;
        throw FlowDomainError(msg.str(), s);
    }
    const TangentState state = TangentState::from_coords(x);
    return hamiltonian_field(obs, state);
}

}  // namespace

SpectralCurve integrate_flow(const JacobiElement& gen,
                             const TangentState& start, double s_end,
                             double step) {
    if (!(step > 0.0) || !(s_end > 0.0)) {
        throw std::invalid_argument("integrate_flow needs s_end, step > 0");
    }
    const Observable obs = psi(gen);
    const auto n_steps = static_cast<std::size_t>(std::lround(s_end / step));
    if (n_steps == 0) {
        throw std::invalid_argument("step exceeds the integration interval");
    }
    const double h = s_end / static_cast<double>(n_steps);

    SpectralCurve curve;
    curve.generator = gen;
    curve.s.reserve(n_steps + 1);
    curve.states.reserve(n_steps + 1);
    curve.velocities.reserve(n_steps + 1);

    Vector4 x = start.coords();
    for (std::size_t k = 0; k <= n_steps; ++k) {
        const double s = h * static_cast<double>(k);
        const Vector4 k1 = field_or_throw(obs, x, s);
        curve.s.push_back(s);
        curve.states.push_back(x);
        curve.velocities.push_back(k1);
        if (k == n_steps) break;
        const Vector4 k2 = field_or_throw(obs, x + 0.5 * h * k1, s + 0.5 * h);
        const Vector4 k3 = field_or_throw(obs, x + 0.5 * h * k2, s + 0.5 * h);
        const Vector4 k4 = field_or_throw(obs, x + h * k3, s + h);
        x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return curve;
}

double conservation_report(const SpectralCurve& c) {
    if (c.states.empty()) {
        throw std::invalid_argument("empty curve");
    }
    const Observable obs = psi(c.generator);
    const double v0 = obs.value(c.states.front());
    double drift = 0.0;
    for (const Vector4& x : c.states) {
        drift = std::max(drift, std::abs(obs.value(x) - v0));
    }
    return drift;
}

double symplecticity_residual(const SpectralCurve& c, double fd_step) {
    if (c.s.size() < 2) {
        throw std::invalid_argument("curve has no extent");
    }
    if (!(fd_step > 0.0)) {
        throw std::invalid_argument("fd_step must be positive");
    }
    const Vector4 x0 = c.states.front();
    const double s_end = c.s.back();
    const double step = c.s[1] - c.s[0];

    // Finite-difference Jacobian of the time-s_end flow map, one column
    // per coordinate direction.
    Matrix4 phi;
    for (int i = 0; i < 4; ++i) {
        Vector4 xp = x0, xm = x0;
        xp(i) += fd_step;
        xm(i) -= fd_step;
        const Vector4 fp = integrate_flow(c.generator,
                                          TangentState::from_coords(xp),
                                          s_end, step)
                               .states.back();
        const Vector4 fm = integrate_flow(c.generator,
                                          TangentState::from_coords(xm),
                                          s_end, step)
                               .states.back();
        phi.col(i) = (fp - fm) / (2.0 * fd_step);
    }

    const Matrix4 omega_start =
        omega_field(TangentState::from_coords(x0), CoordinateSystem::Natural);
    const Matrix4 omega_end = omega_field(
        TangentState::from_coords(c.states.back()), CoordinateSystem::Natural);
    return (phi.transpose() * omega_end * phi - omega_start).norm();
}

void write_curve_csv(std::ostream& out, const SpectralCurve& c) {
    const Observable obs = psi(c.generator);
    out << "s,theta1,theta2,thetadot1,thetadot2,v1,v2,v3,v4,"
           "observable_value\n";
    for (std::size_t k = 0; k < c.s.size(); ++k) {
        const Vector4& x = c.states[k];
        const Vector4& v = c.velocities[k];
        out << c.s[k];
        for (int i = 0; i < 4; ++i) out << ',' << x(i);
        for (int i = 0; i < 4; ++i) out << ',' << v(i);
        out << ',' << obs.value(x) << '\n';
    }
}

}  // namespace logkahler
