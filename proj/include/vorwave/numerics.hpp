#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "vorwave/errors.hpp"

namespace vorwave {

/// Finite-difference weights for the m-th derivative at point z from
/// samples at the given node locations (Fornberg's recursion). Returns
/// weights[k][j]: weight of node j for the k-th derivative, k = 0..m.
inline std::vector<std::vector<double>> fd_weights(double z,
                                                   const std::vector<double>& nodes,
                                                   int m) {
    const int n = static_cast<int>(nodes.size()) - 1;
    std::vector<std::vector<double>> c(m + 1, std::vector<double>(n + 1, 0.0));
    double c1 = 1.0;
    double c4 = nodes[0] - z;
    c[0][0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = nodes[i] - z;
        for (int j = 0; j < i; ++j) {
            const double c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[k][i] = c1 * (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[k][j] = (c4 * c[k][j] - k * c[k - 1][j]) / c3;
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    return c;
}

/// Bisection for a continuous scalar function with a sign change on [a, b].
/// Deterministic; runs until the bracket shrinks below xtol (absolute).
inline double bisect(const std::function<double(double)>& f, double a, double b,
                     double fa, double fb, double xtol) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0) == (fb > 0))
        throw SolverFailure("bisect: endpoints do not bracket a sign change");
    while (b - a > xtol) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break; // bracket at rounding resolution
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (fa > 0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

/// sinh(a)/sinh(b) for a in [0, b], overflow-safe for large arguments.
inline double sinh_ratio(double a, double b) {
    if (b < 30.0) return std::sinh(a) / std::sinh(b);
    // exp-scaled form; exponents are nonpositive
    return std::exp(a - b) * (1.0 - std::exp(-2.0 * a)) / (1.0 - std::exp(-2.0 * b));
}

/// cosh(a)/sinh(b) for a in [0, b], overflow-safe.
inline double cosh_sinh_ratio(double a, double b) {
    if (b < 30.0) return std::cosh(a) / std::sinh(b);
    return std::exp(a - b) * (1.0 + std::exp(-2.0 * a)) / (1.0 - std::exp(-2.0 * b));
}

inline double coth(double x) { return 1.0 / std::tanh(x); }

/// Classical fixed-step RK4 over [t0, t1] with n steps for a d-dimensional
/// first-order system. Calls observe(i, t_i, y_i) at every node including
/// the endpoints. Throws IntegrationFailure if the state stops being finite.
template <int D, typename Rhs, typename Observer>
void rk4_integrate(const Rhs& rhs, std::array<double, D> y, double t0, double t1,
                   int n, Observer&& observe) {
    const double dt = (t1 - t0) / n;
    observe(0, t0, y);
    std::array<double, D> k1, k2, k3, k4, tmp;
    for (int i = 0; i < n; ++i) {
        const double t = t0 + i * dt;
        rhs(t, y, k1);
        for (int d = 0; d < D; ++d) tmp[d] = y[d] + 0.5 * dt * k1[d];
        rhs(t + 0.5 * dt, tmp, k2);
        for (int d = 0; d < D; ++d) tmp[d] = y[d] + 0.5 * dt * k2[d];
        rhs(t + 0.5 * dt, tmp, k3);
        for (int d = 0; d < D; ++d) tmp[d] = y[d] + dt * k3[d];
        rhs(t + dt, tmp, k4);
        bool finite = true;
        for (int d = 0; d < D; ++d) {
            y[d] += dt / 6.0 * (k1[d] + 2.0 * k2[d] + 2.0 * k3[d] + k4[d]);
            finite = finite && std::isfinite(y[d]);
        }
        if (!finite)
            throw IntegrationFailure("integration state left the finite range",
                                     t0 + (i + 1) * dt);
        observe(i + 1, t0 + (i + 1) * dt, y);
    }
}

/// Two-point cubic Hermite evaluation on [0, hstep] from values and first
/// derivatives at both ends; s is the local offset from the left node.
inline double hermite3(double s, double hstep, double f0, double d0, double f1,
                       double d1) {
    const double t = s / hstep;
    const double t2 = t * t, t3 = t2 * t;
    return f0 * (1 - 3 * t2 + 2 * t3) + d0 * hstep * (t - 2 * t2 + t3) +
           f1 * (3 * t2 - 2 * t3) + d1 * hstep * (t3 - t2);
}

/// Two-point quintic Hermite evaluation on [0, hstep] from values, first and
/// second derivatives at both ends; s is the local offset from the left node.
/// Returns the interpolated value. (Error O(hstep^6) for smooth data.)
inline double hermite5(double s, double hstep, double f0, double d0, double dd0,
                       double f1, double d1, double dd1) {
    const double t = s / hstep;
    const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
    // quintic Hermite basis
    const double H0 = 1 - 10 * t3 + 15 * t4 - 6 * t5;
    const double H1 = t - 6 * t3 + 8 * t4 - 3 * t5;
    const double H2 = 0.5 * t2 - 1.5 * t3 + 1.5 * t4 - 0.5 * t5;
    const double H3 = 0.5 * t3 - t4 + 0.5 * t5;
    const double H4 = -4 * t3 + 7 * t4 - 3 * t5;
    const double H5 = 10 * t3 - 15 * t4 + 6 * t5;
    return f0 * H0 + d0 * hstep * H1 + dd0 * hstep * hstep * H2 +
           dd1 * hstep * hstep * H3 + d1 * hstep * H4 + f1 * H5;
}

} // namespace vorwave
