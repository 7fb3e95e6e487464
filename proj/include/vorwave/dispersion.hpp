#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vorwave/errors.hpp"
#include "vorwave/numerics.hpp"
#include "vorwave/uniform_stream.hpp"

namespace vorwave {

/// First k eigenvalues and normalized eigenfunctions of the Dirichlet
/// problem  -w'' - omega'(Psi(y)) w = mu w  on (0, h).
struct EigenSpectrum {
    std::vector<double> mus;                       ///< ascending, simple
    std::vector<double> ys;                        ///< shared profile grid
    std::vector<std::vector<double>> eigenfunctions; ///< L2-normalized
    std::vector<double> dphi_surface;              ///< phi_j'(h)
    std::vector<int> oscillation_counts;           ///< interior zeros (= j-1)
};

/// One dispersion sample at frequency tau: normalized vertical profile
/// gamma with gamma(0)=0, gamma(h)=1, its surface slope, and the
/// dispersion function sigma = kappa*(gamma'(h) - rho0).
struct DispersionSample {
    double tau = 0.0;
    std::vector<double> ys;
    std::vector<double> gamma;
    std::vector<double> dgamma;
    double gamma_prime_h = 0.0;
    double sigma = 0.0;
    double rho0 = 0.0;
    bool sign_definite = false; ///< gamma > 0 on (0, h]
};

struct ScanPoint {
    double tau = 0.0;
    bool resonant = false;
    std::optional<DispersionSample> sample;
};

struct DispersionCurve {
    std::vector<ScanPoint> points;
    /// sigma(tau_max) / (kappa * tau_max) over the last admissible point;
    /// approaches 1 for large tau.
    double asymptotic_ratio = std::numeric_limits<double>::quiet_NaN();
};

namespace detail {

/// Pruefer angle at y = h for the shooting problem; strictly increasing in
/// mu, with theta(h) = j*pi exactly at the j-th eigenvalue.
inline double pruefer_angle_end(const UniformStream& s, double mu, int n) {
    const double h = s.depth();
    std::array<double, 1> th{0.0};
    auto rhs = [&](double y, const std::array<double, 1>& t,
                   std::array<double, 1>& out) {
        const double q = s.vorticity().derivative(s.eval(y).psi);
        const double c = std::cos(t[0]), si = std::sin(t[0]);
        out[0] = c * c + (mu + q) * si * si;
    };
    double end = 0.0;
    rk4_integrate<1>(rhs, th, 0.0, h, n,
                     [&](int, double, const std::array<double, 1>& t) { end = t[0]; });
    return end;
}

inline double max_potential(const UniformStream& s) {
    double q = 0.0;
    for (const auto& g : s.grid())
        q = std::max(q, s.vorticity().derivative(g.psi));
    return q;
}

inline double eigenvalue_bisect(const UniformStream& s, int j, int n) {
    const double target = j * M_PI;
    // Below -(max q) - 1 the coefficient mu + q is negative everywhere, so
    // the angle stays under pi and cannot reach any target; that end of the
    // bracket needs no integration.
    double lo = -max_potential(s) - 1.0;
    double hi = 1.0;
    while (pruefer_angle_end(s, hi, n) <= target) {
        hi *= 2.0;
        if (hi > 1e6)
            throw SolverFailure("eigenvalue bracketing exceeded |mu| = 1e6");
    }
    auto g = [&](double mu) { return pruefer_angle_end(s, mu, n) - target; };
    return bisect(g, lo, hi, -1.0, g(hi), 1e-11 * std::max(1.0, std::abs(hi)));
}

/// Eigenvalue with Richardson control on the integration step.
inline double eigenvalue(const UniformStream& s, int j, int& n_used) {
    int n = 512;
    double prev = eigenvalue_bisect(s, j, n);
    while (n < (1 << 16)) {
        const double next = eigenvalue_bisect(s, j, 2 * n);
        n *= 2;
        if (std::abs(next - prev) <= 5e-10 * std::max(1.0, std::abs(next))) {
            n_used = n;
            return next;
        }
        prev = next;
    }
    n_used = n;
    return prev;
}

/// Integrates u'' = (tau^2 - q(y)) u, u(0)=0, u'(0)=1 on n steps, recording
/// u and u' at the nodes.
inline void shoot_profile(const UniformStream& s, double tau_sq, int n,
                          std::vector<double>& u, std::vector<double>& du) {
    const double h = s.depth();
    u.assign(n + 1, 0.0);
    du.assign(n + 1, 0.0);
    auto rhs = [&](double y, const std::array<double, 2>& st,
                   std::array<double, 2>& out) {
        const double q = s.vorticity().derivative(s.eval(y).psi);
        out[0] = st[1];
        out[1] = (tau_sq - q) * st[0];
    };
    rk4_integrate<2>(rhs, {0.0, 1.0}, 0.0, h, n,
                     [&](int i, double, const std::array<double, 2>& st) {
                         u[i] = st[0];
                         du[i] = st[1];
                     });
}

/// Shoots with step doubling until the profile is resolved to ~1e-10
/// relative accuracy; returns the node count used.
inline int shoot_profile_refined(const UniformStream& s, double tau_sq,
                                 std::vector<double>& u, std::vector<double>& du) {
    int n = 512;
    shoot_profile(s, tau_sq, n, u, du);
    while (n < (1 << 17)) {
        std::vector<double> u2, du2;
        shoot_profile(s, tau_sq, 2 * n, u2, du2);
        double err = 0.0, scale = 0.0;
        for (int k = 0; k <= n; ++k) {
            err = std::max(err, std::abs(u[k] - u2[2 * k]));
            scale = std::max(scale, std::abs(u2[2 * k]));
        }
        u.swap(u2);
        du.swap(du2);
        n *= 2;
        if (err <= 15.0 * 1e-11 * std::max(scale, 1e-300)) break;
    }
    return n;
}

/// Frequencies sqrt(-mu_j) of all nonpositive eigenvalues; gamma is
/// undefined there.
inline std::vector<double> resonant_frequencies(const UniformStream& s) {
    std::vector<double> res;
    // count eigenvalues below a small positive level, then resolve each
    const int probe_n = 2048;
    const double margin = 1e-4;
    const double end = pruefer_angle_end(s, margin, probe_n);
    const int count = static_cast<int>(std::floor(end / M_PI));
    for (int j = 1; j <= count; ++j) {
        int n_used = 0;
        const double mu = eigenvalue(s, j, n_used);
        if (mu <= 1e-8) res.push_back(std::sqrt(std::max(0.0, -mu)));
    }
    return res;
}

inline void guard_resonance(double tau, const std::vector<double>& res) {
    for (double r : res)
        if (std::abs(tau * tau - r * r) < 1e-6)
            throw ResonantTau("tau = " + std::to_string(tau) +
                              " lies in the guard band of the resonant frequency " +
                              std::to_string(r));
}

inline double rho0_of(const UniformStream& s) {
    const auto top = s.eval(s.depth());
    return (1.0 + top.dpsi * top.ddpsi) / (top.dpsi * top.dpsi);
}

inline DispersionSample gamma_profile_guarded(const UniformStream& s, double tau,
                                              const std::vector<double>& res) {
    if (!(tau >= 0.0))
        throw Error("tau must be nonnegative");
    guard_resonance(tau, res);

    std::vector<double> u, du;
    const int n = shoot_profile_refined(s, tau * tau, u, du);
    const double uh = u[n];
    double scale = 0.0;
    for (double v : u) scale = std::max(scale, std::abs(v));
    if (std::abs(uh) <= 1e-10 * scale)
        throw ResonantTau("shooting solution vanishes at the surface; tau^2 is "
                          "numerically an eigenvalue");

    DispersionSample d;
    d.tau = tau;
    d.ys.resize(n + 1);
    d.gamma.resize(n + 1);
    d.dgamma.resize(n + 1);
    const double h = s.depth();
    for (int k = 0; k <= n; ++k) {
        d.ys[k] = h * k / n;
        d.gamma[k] = u[k] / uh;
        d.dgamma[k] = du[k] / uh;
    }
    d.gamma_prime_h = du[n] / uh;
    d.rho0 = rho0_of(s);
    d.sigma = s.kappa() * (d.gamma_prime_h - d.rho0);
    d.sign_definite = true;
    for (int k = 1; k <= n; ++k)
        if (!(d.gamma[k] > 0.0)) {
            d.sign_definite = false;
            break;
        }
    return d;
}

} // namespace detail

/// First k eigenvalues of -w'' - omega'(Psi) w = mu w, w(0) = w(h) = 0,
/// each certified by its oscillation count.
inline EigenSpectrum eigen_spectrum(const UniformStream& s, int k) {
    if (k < 1) throw Error("eigen_spectrum: k must be >= 1");
    EigenSpectrum spec;
    const int n = 4096; // shared profile grid, even for Simpson
    const double h = s.depth();
    spec.ys.resize(n + 1);
    for (int i = 0; i <= n; ++i) spec.ys[i] = h * i / n;
    for (int j = 1; j <= k; ++j) {
        int n_used = 0;
        const double mu = detail::eigenvalue(s, j, n_used);
        std::vector<double> u, du;
        detail::shoot_profile(s, -mu, n, u, du);
        // L2 normalization by composite Simpson
        double integral = 0.0;
        for (int i = 0; i < n; i += 2)
            integral += u[i] * u[i] + 4.0 * u[i + 1] * u[i + 1] + u[i + 2] * u[i + 2];
        integral *= h / n / 3.0;
        const double nrm = std::sqrt(integral);
        int zeros = 0;
        // strict interior crossings; the last pair is excluded because u(h)
        // is a numerical zero of either sign
        for (int i = 1; i + 2 <= n; ++i)
            if (u[i] * u[i + 1] < 0.0) ++zeros;
        if (zeros != j - 1)
            throw SolverFailure("oscillation count " + std::to_string(zeros) +
                                " does not certify eigenvalue index " +
                                std::to_string(j));
        std::vector<double> phi(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) phi[i] = u[i] / nrm;
        spec.mus.push_back(mu);
        spec.eigenfunctions.push_back(std::move(phi));
        spec.dphi_surface.push_back(du[n] / nrm);
        spec.oscillation_counts.push_back(zeros);
    }
    return spec;
}

/// Vertical profile gamma(.; tau) normalized to gamma(h) = 1, with the
/// dispersion value sigma(tau). Throws ResonantTau inside the guard band
/// around sqrt(-mu_j) for nonpositive eigenvalues.
inline DispersionSample gamma_profile(const UniformStream& s, double tau) {
    return detail::gamma_profile_guarded(s, tau, detail::resonant_frequencies(s));
}

/// Evaluates the dispersion function on an ascending tau grid. Resonant
/// points are marked rather than aborting the scan.
inline DispersionCurve sigma_scan(const UniformStream& s,
                                  const std::vector<double>& taus) {
    for (std::size_t i = 1; i < taus.size(); ++i)
        if (!(taus[i] > taus[i - 1]))
            throw Error("sigma_scan: tau grid must be strictly ascending");
    const auto res = detail::resonant_frequencies(s);
    DispersionCurve curve;
    for (double tau : taus) {
        ScanPoint p;
        p.tau = tau;
        try {
            p.sample = detail::gamma_profile_guarded(s, tau, res);
        } catch (const ResonantTau&) {
            p.resonant = true;
        }
        curve.points.push_back(std::move(p));
    }
    for (auto it = curve.points.rbegin(); it != curve.points.rend(); ++it) {
        if (it->sample && it->tau > 0.0) {
            curve.asymptotic_ratio = it->sample->sigma / (s.kappa() * it->tau);
            break;
        }
    }
    return curve;
}

enum class TauStarMode { mu1_positive, mu1_nonpositive };

struct TauStarResult {
    double tau_star = 0.0;
    TauStarMode mode = TauStarMode::mu1_positive;
    DispersionSample at_root;
};

/// Selects the bifurcation frequency: the unique positive root of sigma.
/// With mu_1 > 0 the root exists iff sigma(0) has the sign opposite to
/// kappa (otherwise NoBifurcation); with mu_1 <= 0 the root lies right of
/// sqrt(-mu_1) and the profile there is sign-definite. Monotonicity of
/// sigma makes plain bisection globally convergent.
inline TauStarResult find_tau_star(const UniformStream& s) {
    const auto res = detail::resonant_frequencies(s);
    int n_used = 0;
    const double mu1 = detail::eigenvalue(s, 1, n_used);
    const double kappa = s.kappa();

    auto sigma_at = [&](double tau) {
        return detail::gamma_profile_guarded(s, tau, res).sigma;
    };
    // sign of sigma at the left end of the admissible interval, and the
    // left endpoint itself
    double lo, sig_lo;
    TauStarMode mode;
    if (mu1 > 0.0) {
        mode = TauStarMode::mu1_positive;
        lo = 0.0;
        sig_lo = sigma_at(0.0);
        const bool ok = (kappa > 0.0) ? (sig_lo < 0.0) : (sig_lo > 0.0);
        if (!ok)
            throw NoBifurcation(
                "sigma(0) = " + std::to_string(sig_lo) +
                " has the wrong sign for kappa = " + std::to_string(kappa) +
                "; the dispersion equation has no positive root");
    } else {
        mode = TauStarMode::mu1_nonpositive;
        const double pole = std::sqrt(-mu1);
        double delta = std::max(1e-3 * (1.0 + pole), 4e-6);
        for (;;) {
            lo = pole + delta;
            sig_lo = sigma_at(lo);
            const bool ok = (kappa > 0.0) ? (sig_lo < 0.0) : (sig_lo > 0.0);
            if (ok) break;
            delta *= 0.25;
            if (delta < 2e-6)
                throw SolverFailure("could not find the negative-side bracket "
                                    "next to the resonance pole");
        }
    }

    double hi = std::max(2.0 * lo, 1.0);
    const double cap = 600.0 / s.depth();
    auto bracketed = [&](double t) {
        const double v = sigma_at(t);
        return (kappa > 0.0) ? v > 0.0 : v < 0.0;
    };
    while (!bracketed(hi)) {
        hi *= 2.0;
        if (hi > cap)
            throw SolverFailure("dispersion root bracketing exceeded tau = " +
                                std::to_string(cap));
    }
    auto g = [&](double t) { return sigma_at(t); };
    const double root = bisect(g, lo, hi, sig_lo, g(hi), 1e-10);

    TauStarResult out;
    out.tau_star = root;
    out.mode = mode;
    out.at_root = detail::gamma_profile_guarded(s, root, res);
    return out;
}

struct TransversalityResult {
    double value = 0.0;          ///< d(sigma)/d(lambda) at fixed tau
    double error_estimate = 0.0; ///< Richardson estimate from step halving
};

/// Central finite difference of sigma(tau; lambda) in lambda at fixed tau,
/// rebuilding the uniform stream at lambda +/- step, refined once by step
/// halving (Richardson).
inline TransversalityResult transversality(const VorticityFn& vort, double h,
                                           double lambda, double tau_star,
                                           double step) {
    auto sigma_of = [&](double lam) {
        UniformStream s(vort, h, lam);
        return gamma_profile(s, tau_star).sigma;
    };
    auto central = [&](double st) {
        return (sigma_of(lambda + st) - sigma_of(lambda - st)) / (2.0 * st);
    };
    const double d1 = central(step);
    const double d2 = central(0.5 * step);
    TransversalityResult r;
    r.value = (4.0 * d2 - d1) / 3.0;
    r.error_estimate = std::abs(d2 - d1) / 3.0;
    return r;
}

/// Algebraically equivalent assembly of sigma through the surface value of
/// the vorticity: kappa*gamma'(h) - 1/kappa + omega(Psi(h)). Exposed as a
/// cross-check of the rho0-based route.
inline double sigma_surface_form(const UniformStream& s,
                                 const DispersionSample& d) {
    return s.kappa() * d.gamma_prime_h - 1.0 / s.kappa() +
           s.vorticity().value(0.0);
}

} // namespace vorwave
