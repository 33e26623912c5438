#pragma once

#include <Eigen/Dense>
#include <cmath>

namespace logkahler {

using Vector4 = Eigen::Vector4d;
using Matrix4 = Eigen::Matrix4d;

/// Relative central-difference step: 1e-5 scaled by the coordinate magnitude.
inline double fd_step(double x) { return 1e-5 * std::max(1.0, std::abs(x)); }

template <class F>
double central_diff(const F& f, Vector4 x, int i, double h) {
    Vector4 xp = x, xm = x;
    xp(i) += h;
    xm(i) -= h;
    return (f(xp) - f(xm)) / (2.0 * h);
}

/// Second partial d^2 f / dx_i dx_j by central differences.
template <class F>
double second_partial(const F& f, const Vector4& x, int i, int j, double h) {
    if (i == j) {
        Vector4 xp = x, xm = x;
        xp(i) += h;
        xm(i) -= h;
        return (f(xp) - 2.0 * f(x) + f(xm)) / (h * h);
    }
    Vector4 xpp = x, xpm = x, xmp = x, xmm = x;
    xpp(i) += h; xpp(j) += h;
    xpm(i) += h; xpm(j) -= h;
    xmp(i) -= h; xmp(j) += h;
    xmm(i) -= h; xmm(j) -= h;
    return (f(xpp) - f(xpm) - f(xmp) + f(xmm)) / (4.0 * h * h);
}

template <class F>
Vector4 fd_gradient(const F& f, const Vector4& x, double h) {
    Vector4 g;
    for (int i = 0; i < 4; ++i) g(i) = central_diff(f, x, i, h);
    return g;
}

}  // namespace logkahler
