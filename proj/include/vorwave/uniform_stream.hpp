#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "vorwave/errors.hpp"
#include "vorwave/numerics.hpp"
#include "vorwave/vorticity.hpp"

namespace vorwave {

/// Point sample of the shear profile: value and first two derivatives.
struct StreamSample {
    double psi;
    double dpsi;
    double ddpsi;
};

struct StreamOptions {
    int nodes = 512;        ///< interior step count target on [0, h]
    double tolerance = 1e-12; ///< Richardson target for step doubling
    bool auto_refine = true;  ///< disable to study convergence order
    int max_nodes = 1 << 20;
};

/// Trivial shear solution Psi(y) on (0, h), solved from the surface Cauchy
/// data Psi(h) = 0, Psi'(h) = lambda, integrated down to the bed and
/// smoothly extended by 0.2*h beyond both ends (the right-hand side is
/// globally defined, so the extension is the same ODE).
///
/// Invariants held by construction: Psi(h) = 0, Psi'(h) = lambda,
/// Q = lambda^2/2, m = -Psi(0), kappa = lambda != 0.
class UniformStream {
public:
    UniformStream(VorticityFn vort, double h, double lambda,
                  const StreamOptions& opt = {})
        : vort_(std::move(vort)), h_(h), lambda_(lambda) {
        if (!(h > 0.0))
            throw Error("stream depth must be positive");
        if (lambda == 0.0)
            throw DegenerateLambda(
                "lambda = 0: the uniform stream has zero surface slope and no "
                "admissible Bernoulli data (surface shear must not vanish)");
        if (opt.nodes < 16)
            throw Error("stream solver needs at least 16 nodes");

        int n = opt.nodes;
        integrate_extended(n);
        if (opt.auto_refine) {
            // Richardson control: double the node count until the coarse/fine
            // difference is below tolerance (order 4 => factor 16 per halving).
            while (n < opt.max_nodes) {
                std::vector<double> coarse_psi = psi_, coarse_dpsi = dpsi_;
                const int coarse_ext = ext_;
                integrate_extended(2 * n);
                double err = 0.0;
                for (std::size_t k = 0; k < coarse_psi.size(); ++k) {
                    const std::size_t kk = 2 * k;
                    err = std::max(err, std::abs(coarse_psi[k] - psi_[kk]));
                    err = std::max(err, std::abs(coarse_dpsi[k] - dpsi_[kk]));
                }
                (void)coarse_ext;
                err /= 15.0;
                n *= 2;
                if (err <= opt.tolerance * std::max(1.0, sup_abs_psi()))
                    break;
            }
        }
        m_ = -value_at_node(index_of_zero());
        q_ = 0.5 * lambda * lambda;
    }

    double depth() const { return h_; }
    double lambda() const { return lambda_; }
    double kappa() const { return lambda_; }
    double bernoulli_constant() const { return q_; }
    double bottom_value() const { return m_; } ///< m = -Psi(0)
    const VorticityFn& vorticity() const { return vort_; }
    int nodes() const { return n_; }

    /// Grid restricted to [0, h]: (y_i, Psi_i, Psi'_i).
    struct GridPoint {
        double y, psi, dpsi;
    };
    std::vector<GridPoint> grid() const {
        std::vector<GridPoint> g;
        g.reserve(n_ + 1);
        for (int k = ext_; k <= ext_ + n_; ++k)
            g.push_back({y_of(k), psi_[k], dpsi_[k]});
        return g;
    }

    /// Dense output: Psi, Psi', Psi'' at any y in [-0.2h, 1.2h]. Inside that
    /// range Psi'' is exactly -omega(Psi); beyond it throws OutOfRange.
    StreamSample eval(double y) const {
        const double lo = y_of(0), hi = y_of(static_cast<int>(psi_.size()) - 1);
        const double slack = 1e-12 * h_;
        if (y < lo - slack || y > hi + slack)
            throw OutOfRange("stream evaluation outside the extended interval [" +
                             std::to_string(lo) + ", " + std::to_string(hi) + "]");
        y = std::clamp(y, lo, hi);
        int k = static_cast<int>(std::floor((y - lo) / dy_));
        k = std::clamp(k, 0, static_cast<int>(psi_.size()) - 2);
        const double s = y - y_of(k);
        const double f0 = psi_[k], d0 = dpsi_[k], dd0 = -vort_.value(psi_[k]);
        const double f1 = psi_[k + 1], d1 = dpsi_[k + 1],
                     dd1 = -vort_.value(psi_[k + 1]);
        const double psi = hermite5(s, dy_, f0, d0, dd0, f1, d1, dd1);
        // Psi' gets its own quintic from (Psi', Psi'') pairs; Psi''' at the
        // nodes follows from the chain rule on the right-hand side.
        const double t0 = -vort_.derivative(psi_[k]) * dpsi_[k];
        const double t1 = -vort_.derivative(psi_[k + 1]) * dpsi_[k + 1];
        const double dpsi = hermite5(s, dy_, d0, dd0, t0, d1, dd1, t1);
        return {psi, dpsi, -vort_.value(psi)};
    }

    double sup_abs_psi() const {
        double m = 0.0;
        for (int k = ext_; k <= ext_ + n_; ++k)
            m = std::max(m, std::abs(psi_[k]));
        return m;
    }

private:
    void integrate_extended(int n) {
        n_ = n;
        dy_ = h_ / n;
        ext_ = (n + 4) / 5; // ceil(0.2 n) margin nodes on each side
        const int total = n + 2 * ext_;
        psi_.assign(total + 1, 0.0);
        dpsi_.assign(total + 1, 0.0);

        auto rhs = [this](double /*y*/, const std::array<double, 2>& s,
                          std::array<double, 2>& out) {
            out[0] = s[1];
            out[1] = -vort_.value(s[0]);
        };
        const int top = ext_ + n; // index of y = h
        // downward sweep: from the surface to the lower extension edge
        rk4_integrate<2>(rhs, {0.0, lambda_}, h_, y_of(0), top,
                         [this, top](int i, double, const std::array<double, 2>& s) {
                             psi_[top - i] = s[0];
                             dpsi_[top - i] = s[1];
                         });
        // upward sweep: surface to the upper extension edge
        rk4_integrate<2>(rhs, {0.0, lambda_}, h_, y_of(total), ext_,
                         [this, top](int i, double, const std::array<double, 2>& s) {
                             psi_[top + i] = s[0];
                             dpsi_[top + i] = s[1];
                         });
    }

    double y_of(int k) const { return (k - ext_) * dy_; }
    int index_of_zero() const { return ext_; }
    double value_at_node(int k) const { return psi_[k]; }

    VorticityFn vort_;
    double h_;
    double lambda_;
    double m_ = 0.0;
    double q_ = 0.0;
    int n_ = 0;
    int ext_ = 0;
    double dy_ = 0.0;
    std::vector<double> psi_;
    std::vector<double> dpsi_;
};

/// Solves Psi'' + omega(Psi) = 0 with Psi(h) = 0, Psi'(h) = lambda.
inline UniformStream solve_uniform_stream(const VorticityFn& vort, double h,
                                          double lambda,
                                          const StreamOptions& opt = {}) {
    return UniformStream(vort, h, lambda, opt);
}

} // namespace vorwave
