#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "vorwave/errors.hpp"
#include "vorwave/numerics.hpp"

namespace vorwave {

/// Real periodic function as a finite complex Fourier series
///   u(X) = u0 + sum_{k>=1} 2 Re( hat_k e^{i k tau X} ),  tau = 2 pi / Lambda.
/// Storing only the k >= 1 half makes u_{-k} = conj(u_k) structural.
class PeriodicFunction {
public:
    PeriodicFunction() : lambda_(2.0 * M_PI) {}
    PeriodicFunction(double period, double mean,
                     std::vector<std::complex<double>> hat)
        : lambda_(period), mean_(mean), hat_(std::move(hat)) {
        if (!(period > 0.0))
            throw Error("periodic function needs a positive period");
    }

    /// single cosine mode a*cos(k tau X)
    static PeriodicFunction cosine(double period, int k, double a) {
        std::vector<std::complex<double>> hat(k, {0.0, 0.0});
        hat[k - 1] = {0.5 * a, 0.0};
        return PeriodicFunction(period, 0.0, std::move(hat));
    }
    /// single sine mode a*sin(k tau X)
    static PeriodicFunction sine(double period, int k, double a) {
        std::vector<std::complex<double>> hat(k, {0.0, 0.0});
        hat[k - 1] = {0.0, -0.5 * a};
        return PeriodicFunction(period, 0.0, std::move(hat));
    }

    double period() const { return lambda_; }
    double base_frequency() const { return 2.0 * M_PI / lambda_; }
    double mean() const { return mean_; }
    int modes() const { return static_cast<int>(hat_.size()); }
    /// coefficient of e^{i k tau X}, k >= 1
    std::complex<double> hat(int k) const {
        return (k >= 1 && k <= modes()) ? hat_[k - 1] : std::complex<double>{};
    }

    double value(double X) const {
        const double tau = base_frequency();
        double acc = mean_;
        for (int k = 1; k <= modes(); ++k) {
            const auto& c = hat_[k - 1];
            acc += 2.0 * (c.real() * std::cos(k * tau * X) -
                          c.imag() * std::sin(k * tau * X));
        }
        return acc;
    }

    PeriodicFunction derivative() const {
        const double tau = base_frequency();
        std::vector<std::complex<double>> hat(hat_.size());
        for (int k = 1; k <= modes(); ++k)
            hat[k - 1] = std::complex<double>(0.0, k * tau) * hat_[k - 1];
        return PeriodicFunction(lambda_, 0.0, std::move(hat));
    }

    /// true when all coefficients are (numerically) real
    bool is_even(double tol = 1e-12) const {
        double scale = std::abs(mean_);
        for (const auto& c : hat_) scale = std::max(scale, std::abs(c));
        for (const auto& c : hat_)
            if (std::abs(c.imag()) > tol * std::max(scale, 1.0)) return false;
        return true;
    }

    double energy() const { // sum over k != 0 of |hat_k|^2
        double e = 0.0;
        for (const auto& c : hat_) e += 2.0 * std::norm(c);
        return e;
    }

private:
    double lambda_;
    double mean_ = 0.0;
    std::vector<std::complex<double>> hat_;
};

/// Periodic Hilbert transform for a strip of depth h: the Fourier
/// multiplier -i coth(k tau h) on each nonzero mode. Requires zero mean.
inline PeriodicFunction periodic_hilbert(const PeriodicFunction& u, double h) {
    double scale = 1.0;
    for (int k = 1; k <= u.modes(); ++k) scale = std::max(scale, std::abs(u.hat(k)));
    if (std::abs(u.mean()) > 1e-13 * scale)
        throw NonzeroMean("periodic Hilbert transform requires zero average, got " +
                          std::to_string(u.mean()));
    const double tau = u.base_frequency();
    std::vector<std::complex<double>> hat(u.modes());
    for (int k = 1; k <= u.modes(); ++k)
        hat[k - 1] = std::complex<double>(0.0, -coth(k * tau * h)) * u.hat(k);
    return PeriodicFunction(u.period(), 0.0, std::move(hat));
}

/// Field values and derivatives of the conformal pair (U, V) at one point.
/// Every entry is assembled from its own mode formula, so the identities
/// U_X = V_Y and U_Y = -V_X are genuine consistency checks, not copies.
struct ConformalSample {
    double U, V;
    double U_X, U_Y, V_X, V_Y;
    double U_XX, V_XX; ///< second derivatives along X (enough by harmonicity)
};

/// Conformal parametrization of a periodic water domain over a flat bed:
/// H = U + iV maps the strip -h < Y < 0 onto the domain, the line Y = 0
/// onto the (possibly overhanging) surface and Y = -h onto the bed, with
/// U drifting by one period per period. V solves the Dirichlet problem
/// with boundary trace w + h on Y = 0 and 0 on Y = -h, and U is its
/// conjugate; both are assembled mode by mode, so harmonicity is exact.
class ConformalMap {
public:
    ConformalMap(PeriodicFunction w, double h) : w_(std::move(w)), h_(h) {
        if (!(h > 0.0)) throw Error("conformal depth must be positive");
        double scale = 1.0;
        for (int k = 1; k <= w_.modes(); ++k)
            scale = std::max(scale, std::abs(w_.hat(k)));
        if (std::abs(w_.mean()) > 1e-13 * scale)
            throw NonzeroMean("surface trace must have zero mean; fold the mean "
                              "into the conformal depth");
        check_gradient_floor();
    }

    double depth() const { return h_; }
    const PeriodicFunction& trace() const { return w_; }
    double period() const { return w_.period(); }

    ConformalSample eval(double X, double Y) const {
        const double tau = w_.base_frequency();
        ConformalSample s{};
        s.U = X;
        s.V = Y + h_;
        s.U_X = 1.0;
        s.V_Y = 1.0;
        s.U_Y = 0.0;
        s.V_X = 0.0;
        s.U_XX = 0.0;
        s.V_XX = 0.0;
        for (int k = 1; k <= w_.modes(); ++k) {
            const auto c = w_.hat(k);
            const double p = c.real(), q = c.imag();
            const double kt = k * tau;
            const double S = sinh_ratio(kt * (Y + h_), kt * h_);
            const double C = cosh_sinh_ratio(kt * (Y + h_), kt * h_);
            const double cosx = std::cos(kt * X), sinx = std::sin(kt * X);
            const double ev = 2.0 * (p * cosx - q * sinx); // even combination
            const double od = 2.0 * (p * sinx + q * cosx); // odd combination
            s.V += ev * S;
            s.U += od * C;
            s.V_X += -kt * od * S;
            s.V_Y += kt * ev * C;
            s.U_X += kt * ev * C;
            s.U_Y += kt * od * S;
            s.V_XX += -kt * kt * ev * S;
            s.U_XX += -kt * kt * od * C;
        }
        return s;
    }

    /// |grad V|^2 = V_X^2 + V_Y^2 (the conformal factor)
    double grad_v_squared(double X, double Y) const {
        const auto s = eval(X, Y);
        return s.V_X * s.V_X + s.V_Y * s.V_Y;
    }

    /// Surface point at parameter X: (U(X,0), V(X,0)).
    std::array<double, 2> surface_point(double X) const {
        const auto s = eval(X, 0.0);
        return {s.U, s.V};
    }

private:
    void check_gradient_floor() {
        const int nx = 96, ny = 48;
        double lo = std::numeric_limits<double>::infinity();
        for (int i = 0; i <= nx; ++i)
            for (int j = 0; j <= ny; ++j) {
                const double X = w_.period() * i / nx;
                const double Y = -h_ + h_ * j / ny;
                lo = std::min(lo, std::sqrt(grad_v_squared(X, Y)));
            }
        if (lo < 1e-8)
            throw DegenerateMap("conformal factor floor violated: min |grad V| = " +
                                std::to_string(lo));
    }

    PeriodicFunction w_;
    double h_;
};

inline ConformalMap build_conformal_map(const PeriodicFunction& w, double h) {
    return ConformalMap(w, h);
}

/// Result of the surface proximity scan. min_distance is the smallest
/// spatial gap between parts of the curve that are much closer in space
/// than along the arc (a "shortcut"); infinity when no such pair exists.
struct SurfaceProximityReport {
    bool intersects = false;
    double min_distance = std::numeric_limits<double>::infinity();
    double param_a = 0.0, param_b = 0.0; ///< X parameters of the closest pair
};

namespace detail {

inline double segment_distance(double ax, double ay, double bx, double by,
                               double cx, double cy, double dx, double dy) {
    auto clamp01 = [](double v) { return std::clamp(v, 0.0, 1.0); };
    auto point_seg = [&](double px, double py, double qx, double qy, double rx,
                         double ry) {
        const double vx = rx - qx, vy = ry - qy;
        const double L2 = vx * vx + vy * vy;
        const double s = L2 > 0 ? clamp01(((px - qx) * vx + (py - qy) * vy) / L2) : 0.0;
        const double ex = qx + s * vx - px, ey = qy + s * vy - py;
        return std::sqrt(ex * ex + ey * ey);
    };
    // proper crossing test
    auto orient = [](double ox, double oy, double px, double py, double qx,
                     double qy) {
        return (px - ox) * (qy - oy) - (py - oy) * (qx - ox);
    };
    const double o1 = orient(ax, ay, bx, by, cx, cy);
    const double o2 = orient(ax, ay, bx, by, dx, dy);
    const double o3 = orient(cx, cy, dx, dy, ax, ay);
    const double o4 = orient(cx, cy, dx, dy, bx, by);
    if (((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0))) return 0.0;
    double d = point_seg(ax, ay, cx, cy, dx, dy);
    d = std::min(d, point_seg(bx, by, cx, cy, dx, dy));
    d = std::min(d, point_seg(cx, cy, ax, ay, bx, by));
    d = std::min(d, point_seg(dx, dy, ax, ay, bx, by));
    return d;
}

} // namespace detail

/// Scans one period of the parametric surface (plus a guard margin on both
/// sides) with a 1024-segment polyline and reports shortcut pairs: segment
/// pairs whose spatial distance is below half their separation along the
/// curve. Graph-like surfaces have none; a crossing shows up as distance 0.
inline SurfaceProximityReport surface_self_intersection(const ConformalMap& map) {
    const int n = 1024;
    const double P = map.period();
    const double margin = 0.1 * P;
    const double s0 = -margin, s1 = P + margin;
    std::vector<double> px(n + 1), py(n + 1), X(n + 1), arc(n + 1, 0.0);
    for (int i = 0; i <= n; ++i) {
        X[i] = s0 + (s1 - s0) * i / n;
        const auto pt = map.surface_point(X[i]);
        px[i] = pt[0];
        py[i] = pt[1];
        if (i > 0)
            arc[i] = arc[i - 1] + std::hypot(px[i] - px[i - 1], py[i] - py[i - 1]);
    }
    SurfaceProximityReport rep;
    const int window = 2; // adjacency exclusion
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1 + window; j < n; ++j) {
            const double d = detail::segment_distance(px[i], py[i], px[i + 1],
                                                      py[i + 1], px[j], py[j],
                                                      px[j + 1], py[j + 1]);
            const double along = std::abs(0.5 * (arc[j] + arc[j + 1]) -
                                          0.5 * (arc[i] + arc[i + 1]));
            if (d < 0.5 * along && d < rep.min_distance) {
                rep.min_distance = d;
                rep.param_a = X[i];
                rep.param_b = X[j];
            }
        }
    }
    rep.intersects = rep.min_distance < 1e-8;
    return rep;
}

/// Conformal depth whose map attains a prescribed mean physical surface
/// height for the given zero-mean trace shape; scalar secant iteration on
/// the closed-form period average
///   mean(h) = h + 2 sum_k k tau coth(k tau h) |w_k|^2.
inline double conformal_depth_for_mean_height(const PeriodicFunction& w_shape,
                                              double target_mean) {
    if (!(target_mean > 0.0))
        throw Error("target mean surface height must be positive");
    const double tau = w_shape.base_frequency();
    auto mean_of = [&](double h) {
        double acc = h;
        for (int k = 1; k <= w_shape.modes(); ++k)
            acc += 2.0 * k * tau * coth(k * tau * h) * std::norm(w_shape.hat(k));
        return acc;
    };
    double h0 = target_mean, h1 = 0.5 * target_mean;
    double f0 = mean_of(h0) - target_mean, f1 = mean_of(h1) - target_mean;
    for (int it = 0; it < 80; ++it) {
        if (std::abs(f1) < 1e-13 * target_mean) return h1;
        const double step = f1 * (h1 - h0) / (f1 - f0);
        h0 = h1;
        f0 = f1;
        h1 = std::max(0.05 * target_mean, h1 - step);
        f1 = mean_of(h1) - target_mean;
    }
    throw SolverFailure("conformal depth iteration did not converge");
}

} // namespace vorwave
