#pragma once

#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "logkahler/dombrowski.hpp"

namespace logkahler {

/// Coefficients over the six-element basis {F, G, H, P, Q, R} of the
/// Jacobi algebra.
struct JacobiElement {
    double f = 0.0;
    double g = 0.0;
    double h = 0.0;
    double p = 0.0;
    double q = 0.0;
    double r = 0.0;

    static JacobiElement F() { return {1, 0, 0, 0, 0, 0}; }
    static JacobiElement G() { return {0, 1, 0, 0, 0, 0}; }
    static JacobiElement H() { return {0, 0, 1, 0, 0, 0}; }
    static JacobiElement P() { return {0, 0, 0, 1, 0, 0}; }
    static JacobiElement Q() { return {0, 0, 0, 0, 1, 0}; }
    static JacobiElement R() { return {0, 0, 0, 0, 0, 1}; }
    static std::vector<std::pair<std::string, JacobiElement>> basis();
    static JacobiElement from_name(const std::string& name);
};

/// A smooth function on the tangent bundle together with its analytic
/// gradient.
struct Observable {
    std::function<double(const Vector4&)> value;
    std::function<Vector4(const Vector4&)> gradient;
};

/// The moment-map assignment F -> 0, G -> t2^2/2 + t2 + d1 + d2^2/2,
/// H -> t1, P -> t2 + d1, Q -> t2, R -> -1/4, extended linearly.
Observable psi(const JacobiElement& L);

/// Symplectic gradient: theta components h^{ij} df/ddot_i, fiber
/// components -h^{ij} df/dtheta_i.
Vector4 hamiltonian_field(const Observable& f, const TangentState& s);

/// The six printed closed-form fields, combined linearly.
Vector4 closed_form_field(const JacobiElement& L, const TangentState& s);

struct SpectralCurve {
    std::vector<double> s;          // strictly increasing uniform grid
    std::vector<Vector4> states;
    std::vector<Vector4> velocities;  // field value per sample
    JacobiElement generator;
};

class FlowDomainError : public std::runtime_error {
public:
    FlowDomainError(const std::string& what, double exit_parameter)
        : std::runtime_error(what), exit_parameter_(exit_parameter) {}
    double exit_parameter() const { return exit_parameter_; }

private:
    double exit_parameter_;
};

/// Classical fixed-step RK4 integration of the generator's field.
SpectralCurve integrate_flow(const JacobiElement& gen,
                             const TangentState& start, double s_end,
                             double step);

/// Max drift of the generator observable along the curve.
double conservation_report(const SpectralCurve& c);

/// ||Phi^T omega(end) Phi - omega(start)|| with Phi the finite-difference
/// Jacobian of the flow map over the curve's parameter interval.
double symplecticity_residual(const SpectralCurve& c, double fd_step);

/// CSV export: s, theta1, theta2, thetadot1, thetadot2, v1..v4,
/// observable_value.
void write_curve_csv(std::ostream& out, const SpectralCurve& c);

}  // namespace logkahler
