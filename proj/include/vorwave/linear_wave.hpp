#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "vorwave/dispersion.hpp"
#include "vorwave/errors.hpp"
#include "vorwave/fourier.hpp"
#include "vorwave/numerics.hpp"
#include "vorwave/uniform_stream.hpp"

namespace vorwave {

/// Which quantity parametrizes the bifurcation branch. The frame convention
/// follows the parametrization: fixed_period keeps the bed at y = 0 and the
/// mean surface at y = h; variable_period shifts the frame down so the mean
/// surface sits at y = 0 and the bed at y = -h.
enum class Regime { fixed_period, variable_period };

/// First and second derivatives of the flattening coordinates (X, Y) as
/// functions of the physical point, evaluated at a computational node.
/// X_y, X_xx, X_xy, X_yy vanish identically for the graph-type maps.
struct MapMetric {
    double x = 0.0, y = 0.0; ///< physical image of the node
    double X_x = 1.0, X_y = 0.0;
    double Y_x = 0.0, Y_y = 1.0;
    double X_xx = 0.0, X_xy = 0.0, X_yy = 0.0;
    double Y_xx = 0.0, Y_xy = 0.0, Y_yy = 0.0;
};

/// Graph-type flattening of the fluid domain onto a fixed rectangle.
///   fixed_period:    X = x,                Y = h y / (eta + h)
///   variable_period: X = Lambda* x/Lambda, Y = h (y - eta) / (eta + h)
/// eta is carried as a cosine series in the computational X variable.
class CoordinateMap {
public:
    CoordinateMap(Regime regime, double h, double Lambda, double Lambda_star,
                  CosineSeries eta)
        : regime_(regime), h_(h), lambda_cap_(Lambda), lambda_star_(Lambda_star),
          eta_(std::move(eta)) {
        if (!(h > 0.0) || !(Lambda > 0.0) || !(Lambda_star > 0.0))
            throw Error("coordinate map needs positive depth and periods");
        if (eta_.min_value() + h <= 0.0)
            throw SurfaceTouchesBed("surface elevation reaches the bed: min(eta) + h = " +
                                    std::to_string(eta_.min_value() + h));
    }

    Regime regime() const { return regime_; }
    double depth() const { return h_; }
    double physical_period() const { return lambda_cap_; }
    double reference_period() const { return lambda_star_; }
    const CosineSeries& surface() const { return eta_; }

    /// period of the computational X coordinate
    double computational_period() const {
        return regime_ == Regime::fixed_period ? lambda_cap_ : lambda_star_;
    }
    /// dX/dx
    double alpha() const { return computational_period() / lambda_cap_; }

    double bottom_Y() const { return regime_ == Regime::fixed_period ? 0.0 : -h_; }
    double surface_Y() const { return regime_ == Regime::fixed_period ? h_ : 0.0; }
    /// frame height entering the Bernoulli condition (mean surface level)
    double datum() const { return surface_Y(); }

    /// physical surface elevation at computational abscissa X
    double surface_height(double X) const {
        return regime_ == Regime::fixed_period ? h_ + eta_.value(X) : eta_.value(X);
    }
    double bed_height() const { return regime_ == Regime::fixed_period ? 0.0 : -h_; }

    std::array<double, 2> forward(double x, double y) const {
        const double X = alpha() * x;
        const double e = eta_.value(X);
        const double d = e + h_;
        const double Y = regime_ == Regime::fixed_period ? h_ * y / d
                                                         : h_ * (y - e) / d;
        return {X, Y};
    }

    std::array<double, 2> inverse(double X, double Y) const {
        const double e = eta_.value(X);
        const double d = e + h_;
        const double x = X / alpha();
        const double y = regime_ == Regime::fixed_period ? d * Y / h_
                                                         : e + d * Y / h_;
        return {x, y};
    }

    /// Jacobian of the inverse map: [[dx/dX, dx/dY], [dy/dX, dy/dY]].
    std::array<std::array<double, 2>, 2> jacobian(double X, double Y) const {
        const double e = eta_.value(X);
        const double de = eta_.derivative(X);
        const double d = e + h_;
        const double dxdX = 1.0 / alpha();
        if (regime_ == Regime::fixed_period)
            return {{{dxdX, 0.0}, {de * Y / h_, d / h_}}};
        return {{{dxdX, 0.0}, {de * (1.0 + Y / h_), d / h_}}};
    }

    double jacobian_determinant(double X, double Y) const {
        const auto J = jacobian(X, Y);
        return J[0][0] * J[1][1] - J[0][1] * J[1][0];
    }

    /// Forward-map derivative data at a computational node; this is what the
    /// chain rule of the flattened elliptic operator consumes.
    MapMetric metric(double X, double Y) const {
        MapMetric m;
        const double a = alpha();
        const double e = eta_.value(X);
        // derivatives of eta with respect to the physical x
        const double ex = a * eta_.derivative(X);
        const double exx = a * a * eta_.second_derivative(X);
        const double d = e + h_;
        const double Yrel = Y - bottom_Y(); // height above the bed row
        const auto phys = inverse(X, Y);
        m.x = phys[0];
        m.y = phys[1];
        m.X_x = a;
        m.Y_y = h_ / d;
        m.Y_x = -ex * Yrel / d;
        m.Y_xx = -exx * Yrel / d + 2.0 * ex * ex * Yrel / (d * d);
        m.Y_xy = -ex * h_ / (d * d);
        return m;
    }

private:
    Regime regime_;
    double h_;
    double lambda_cap_;
    double lambda_star_;
    CosineSeries eta_;
};

inline CoordinateMap make_coordinate_map(Regime regime, double h, double Lambda,
                                         double Lambda_star, CosineSeries eta) {
    return CoordinateMap(regime, h, Lambda, Lambda_star, std::move(eta));
}

namespace detail {

/// Vertical profile with dense Hermite output on a uniform grid extended
/// beyond [0, h]; second derivatives at the nodes come from the profile
/// equation itself.
struct DenseProfile {
    double y0 = 0.0, dy = 1.0;
    std::vector<double> f, df, ddf;

    double value(double y) const {
        const int k = clamp_interval(y);
        return hermite5(y - (y0 + k * dy), dy, f[k], df[k], ddf[k], f[k + 1],
                        df[k + 1], ddf[k + 1]);
    }
    double deriv(double y) const {
        const int k = clamp_interval(y);
        return hermite3(y - (y0 + k * dy), dy, df[k], ddf[k], df[k + 1], ddf[k + 1]);
    }

    int clamp_interval(double y) const {
        const int last = static_cast<int>(f.size()) - 2;
        int k = static_cast<int>(std::floor((y - y0) / dy));
        if (k < 0 || k > last) {
            const double hi = y0 + (last + 1) * dy;
            if (y < y0 - 1e-12 * dy || y > hi + 1e-12 * dy)
                throw OutOfRange("profile evaluation outside the extended interval");
            k = std::clamp(k, 0, last);
        }
        return k;
    }
};

/// Integrates the dispersion profile equation u'' = (tau^2 - omega'(Psi)) u
/// over the stream's extended interval and normalizes to u(h) = 1.
inline DenseProfile extended_gamma(const UniformStream& s, double tau, int n) {
    const double h = s.depth();
    const int ext = (n + 4) / 5;
    const int total = n + 2 * ext;
    DenseProfile p;
    p.dy = h / n;
    p.y0 = -ext * p.dy;
    p.f.assign(total + 1, 0.0);
    p.df.assign(total + 1, 0.0);
    p.ddf.assign(total + 1, 0.0);

    auto rhs = [&](double y, const std::array<double, 2>& st,
                   std::array<double, 2>& out) {
        const double q = s.vorticity().derivative(s.eval(y).psi);
        out[0] = st[1];
        out[1] = (tau * tau - q) * st[0];
    };
    // upward from the bed value (0, 1), then downward into the extension
    rk4_integrate<2>(rhs, {0.0, 1.0}, 0.0, p.y0 + total * p.dy, n + ext,
                     [&](int i, double, const std::array<double, 2>& st) {
                         p.f[ext + i] = st[0];
                         p.df[ext + i] = st[1];
                     });
    rk4_integrate<2>(rhs, {0.0, 1.0}, 0.0, p.y0, ext,
                     [&](int i, double, const std::array<double, 2>& st) {
                         p.f[ext - i] = st[0];
                         p.df[ext - i] = st[1];
                     });
    const double uh = p.f[ext + n];
    double scale = 0.0;
    for (double v : p.f) scale = std::max(scale, std::abs(v));
    if (std::abs(uh) <= 1e-10 * scale)
        throw ResonantTau("profile normalization impossible: tau^2 is numerically "
                          "an eigenvalue");
    for (int k = 0; k <= total; ++k) {
        p.f[k] /= uh;
        p.df[k] /= uh;
        const double y = p.y0 + k * p.dy;
        const double q = s.vorticity().derivative(s.eval(y).psi);
        p.ddf[k] = (tau * tau - q) * p.f[k];
    }
    return p;
}

} // namespace detail

struct LinearWaveOptions {
    bool c_star_at_bed = true; ///< false evaluates the stream slope at the surface
    int profile_nodes = 2048;
};

struct WaveSample {
    double psi;
    double psi_x;
    double psi_y;
};

/// First-order small-amplitude wave over a uniform stream:
///   eta(x)    = t cos(tau x)
///   psi(x, y) = Psi(yr) + c* t gamma(yr) cos(tau x),
/// where yr is the height above the bed and both profiles are smoothly
/// extended beyond the water column so that the expression is defined up to
/// the perturbed surface. The x-derivative is the exact derivative of this
/// expression (a sine mode), which is what gives the half-period cell its
/// one-signed vertical velocity at first order.
class LinearWave {
public:
    LinearWave(UniformStream stream, double tau, double t, Regime regime,
               const LinearWaveOptions& opt = {})
        : stream_(std::move(stream)), tau_(tau), t_(t), regime_(regime) {
        const double h = stream_.depth();
        if (std::abs(t) > 0.2 * h)
            throw AmplitudeTooLarge("amplitude " + std::to_string(t) +
                                    " exceeds the first-order window 0.2 h = " +
                                    std::to_string(0.2 * h));
        gamma_ = detail::extended_gamma(stream_, tau, opt.profile_nodes);
        const double slope_point = opt.c_star_at_bed ? 0.0 : h;
        c_star_ = -stream_.eval(slope_point).dpsi;
    }

    const UniformStream& stream() const { return stream_; }
    Regime regime() const { return regime_; }
    double tau() const { return tau_; }
    double amplitude() const { return t_; }
    double c_star() const { return c_star_; }
    double wavelength() const { return 2.0 * M_PI / tau_; }
    double depth() const { return stream_.depth(); }

    double bed_y() const {
        return regime_ == Regime::fixed_period ? 0.0 : -stream_.depth();
    }
    double surface_datum() const {
        return regime_ == Regime::fixed_period ? stream_.depth() : 0.0;
    }
    /// physical surface height
    double surface(double x) const { return surface_datum() + eta(x); }
    /// surface elevation relative to the mean level
    double eta(double x) const { return t_ * std::cos(tau_ * x); }

    CosineSeries eta_series() const {
        return CosineSeries(wavelength(), {0.0, t_});
    }

    /// psi and its physical gradient anywhere in the closed fluid domain
    WaveSample eval(double x, double y) const {
        const double slack = 1e-10 * stream_.depth();
        if (y < bed_y() - slack || y > surface(x) + slack)
            throw OutOfDomain("evaluation point is outside the fluid domain");
        return eval_unchecked(x, y);
    }

    /// same field without the domain guard (used for residual order scans
    /// on flattened grids whose nodes sit exactly on the boundary)
    WaveSample eval_unchecked(double x, double y) const {
        const double yr = y - bed_y(); // height above the bed
        const auto st = stream_.eval(yr);
        const double g = gamma_.value(yr);
        const double dg = gamma_.deriv(yr);
        const double c = std::cos(tau_ * x), s = std::sin(tau_ * x);
        WaveSample w;
        w.psi = st.psi + c_star_ * t_ * g * c;
        w.psi_x = -tau_ * c_star_ * t_ * g * s;
        w.psi_y = st.dpsi + c_star_ * t_ * dg * c;
        return w;
    }

private:
    UniformStream stream_;
    double tau_;
    double t_;
    Regime regime_;
    double c_star_ = 0.0;
    detail::DenseProfile gamma_;
};

inline LinearWave build_linear_wave(const UniformStream& s, double tau_star,
                                    double t, Regime regime,
                                    const LinearWaveOptions& opt = {}) {
    return LinearWave(s, tau_star, t, regime, opt);
}

/// Exact x-derivative of the first-order field.
inline double linear_wave_slope(const LinearWave& w, double x, double y) {
    return w.eval(x, y).psi_x;
}

} // namespace vorwave
