#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "vorwave/numerics.hpp"
#include "vorwave/uniform_stream.hpp"

using namespace vorwave;

namespace {

// Closed form for omega(p) = a*p + b, a > 0:
//   Psi(y) = A cos(w y) + B sin(w y) - b/a,  w = sqrt(a),
// with A, B fixed by Psi(h) = 0, Psi'(h) = lambda.
struct LinearVorticityOracle {
    double a, b, h, lambda;
    double w() const { return std::sqrt(a); }
    double A() const {
        // solve [cos(wh) sin(wh); -w sin(wh) w cos(wh)] [A B]^T = [b/a, lambda]
        const double c = std::cos(w() * h), s = std::sin(w() * h);
        return (b / a) * c - (lambda / w()) * s;
    }
    double B() const {
        const double c = std::cos(w() * h), s = std::sin(w() * h);
        return (b / a) * s + (lambda / w()) * c;
    }
    double psi(double y) const {
        return A() * std::cos(w() * y) + B() * std::sin(w() * y) - b / a;
    }
    double dpsi(double y) const {
        return w() * (-A() * std::sin(w() * y) + B() * std::cos(w() * y));
    }
};

} // namespace

TEST_CASE("irrotational stream is affine") {
    UniformStream s(VorticityFn::zero(), 1.0, 1.0);
    CHECK(std::abs(s.bottom_value() - 1.0) < 1e-12);
    CHECK(s.bernoulli_constant() == 0.5);
    CHECK(s.kappa() == 1.0);
    for (double y : {0.0, 0.25, 0.5, 0.93, 1.0}) {
        const auto v = s.eval(y);
        CHECK(std::abs(v.psi - (y - 1.0)) < 1e-12);
        CHECK(std::abs(v.dpsi - 1.0) < 1e-12);
        CHECK(v.ddpsi == 0.0);
    }
}

TEST_CASE("constant vorticity stream has the quadratic closed form") {
    // omega = 1: Psi(y) = -(y-1)^2/2 + (y-1), m = 3/2
    UniformStream s(VorticityFn::polynomial({1.0}), 1.0, 1.0);
    CHECK(std::abs(s.bottom_value() - 1.5) < 1e-12);
    CHECK(s.kappa() == 1.0);
    for (double y : {0.0, 0.3, 0.77, 1.0}) {
        const double exact = -(y - 1.0) * (y - 1.0) / 2.0 + (y - 1.0);
        CHECK(std::abs(s.eval(y).psi - exact) < 1e-11);
    }
    const auto bottom = s.eval(0.0);
    CHECK(std::abs(bottom.psi - (-1.5)) < 1e-11);
    CHECK(std::abs(bottom.dpsi - 2.0) < 1e-11);
    CHECK(std::abs(bottom.ddpsi - (-1.0)) < 1e-11);
}

TEST_CASE("lambda = 0 is rejected") {
    CHECK_THROWS_AS(UniformStream(VorticityFn::zero(), 1.0, 0.0), DegenerateLambda);
}

TEST_CASE("surface Cauchy data is hit exactly") {
    UniformStream s(VorticityFn::linear(1.3, -0.4), 1.0, 0.8);
    const auto top = s.eval(1.0);
    CHECK(std::abs(top.psi) < 1e-13);
    CHECK(std::abs(top.dpsi - 0.8) <= 1e-12);
}

TEST_CASE("solution matches the linear-vorticity closed form") {
    const LinearVorticityOracle oracle{2.0, 0.7, 1.0, 0.8};
    UniformStream s(VorticityFn::linear(2.0, 0.7), 1.0, 0.8);
    for (int i = 0; i <= 40; ++i) {
        const double y = i / 40.0;
        const auto v = s.eval(y);
        CHECK(std::abs(v.psi - oracle.psi(y)) < 1e-11);
        CHECK(std::abs(v.dpsi - oracle.dpsi(y)) < 1e-11);
    }
}

TEST_CASE("grid residual of the shear ODE via finite differences") {
    UniformStream s(VorticityFn::linear(1.5, 0.3), 1.0, 0.7);
    const auto g = s.grid();
    // strided 4th-order second derivative; the stride keeps the roundoff
    // amplification of the stencil below the tolerance
    const std::size_t st = 4;
    const double dy = st * (g[1].y - g[0].y);
    for (std::size_t k = 2 * st; k + 2 * st < g.size(); k += st) {
        const double dd = (-g[k - 2 * st].psi + 16 * g[k - st].psi - 30 * g[k].psi +
                           16 * g[k + st].psi - g[k + 2 * st].psi) /
                          (12 * dy * dy);
        const double res = dd + s.vorticity().value(g[k].psi);
        CHECK(std::abs(res) < 1e-9);
    }
}

TEST_CASE("energy identity holds along the profile") {
    const VorticityFn f = VorticityFn::polynomial({0.4, 1.1, -0.2});
    UniformStream s(f, 1.0, 0.9);
    const double e0 = 0.5 * s.eval(0.0).dpsi * s.eval(0.0).dpsi +
                      f.antiderivative(s.eval(0.0).psi);
    for (int i = 0; i <= 64; ++i) {
        const double y = i / 64.0;
        const auto v = s.eval(y);
        const double e = 0.5 * v.dpsi * v.dpsi + f.antiderivative(v.psi);
        CHECK(std::abs(e - e0) < 1e-8);
    }
}

TEST_CASE("integrator converges at fourth order") {
    // fixed-step runs (no refinement) against the closed form
    const LinearVorticityOracle oracle{3.0, 0.5, 1.0, 1.0};
    auto sup_err = [&](int n) {
        StreamOptions opt;
        opt.nodes = n;
        opt.auto_refine = false;
        UniformStream s(VorticityFn::linear(3.0, 0.5), 1.0, 1.0, opt);
        double e = 0.0;
        for (const auto& gp : s.grid())
            e = std::max(e, std::abs(gp.psi - oracle.psi(gp.y)));
        return e;
    };
    const double e1 = sup_err(32);
    const double e2 = sup_err(64);
    CHECK(e1 / e2 >= 16.0 * 0.85); // order >= 4 up to a modest constant drift
}

TEST_CASE("stream depends continuously on lambda") {
    const VorticityFn f = VorticityFn::linear(1.0, 0.2);
    UniformStream base(f, 1.0, 0.8);
    auto sup_diff = [&](double delta) {
        UniformStream pert(f, 1.0, 0.8 + delta);
        double d = 0.0;
        for (int i = 0; i <= 64; ++i) {
            const double y = i / 64.0;
            d = std::max(d, std::abs(pert.eval(y).psi - base.eval(y).psi));
        }
        return d;
    };
    const double d1 = sup_diff(1e-4);
    const double d2 = sup_diff(0.5e-4);
    CHECK(d1 / d2 == Catch::Approx(2.0).margin(0.2)); // first-order response
}

TEST_CASE("extension beyond the water column") {
    UniformStream s(VorticityFn::zero(), 1.0, 1.0);
    // the affine profile extends as the same line
    CHECK(std::abs(s.eval(1.1).psi - 0.1) < 1e-11);
    CHECK(std::abs(s.eval(-0.1).psi + 1.1) < 1e-11);
    CHECK_THROWS_AS(s.eval(1.0 + 0.3), OutOfRange);
    CHECK_THROWS_AS(s.eval(-0.3), OutOfRange);
}

TEST_CASE("blow-up inside the interval reports the location") {
    // steeply superlinear anti-restoring vorticity drives the profile to
    // infinity before the bed is reached
    StreamOptions opt;
    opt.nodes = 64;
    opt.auto_refine = false;
    const VorticityFn f = VorticityFn::polynomial({0, 0, 0, 0, 0, 0, 0, -1e8});
    CHECK_THROWS_AS(UniformStream(f, 1.0, 5.0, opt), IntegrationFailure);
}
