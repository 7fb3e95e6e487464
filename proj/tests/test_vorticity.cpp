#include <catch2/catch_amalgamated.hpp>

#include "vorwave/vorticity.hpp"

using vorwave::VorticityFn;

TEST_CASE("vorticity evaluation of the closed forms") {
    CHECK(VorticityFn::zero().value(0.7) == 0.0);
    CHECK(VorticityFn::linear(2.0, 1.0).value(0.5) == 2.0);
    CHECK(VorticityFn::polynomial({1.0, 0.0, 3.0}).value(2.0) == 13.0);
}

TEST_CASE("vorticity derivatives of the closed forms") {
    CHECK(VorticityFn::zero().derivative(1.0) == 0.0);
    CHECK(VorticityFn::linear(2.0, 1.0).derivative(-3.0) == 2.0);
    CHECK(VorticityFn::polynomial({1.0, 0.0, 3.0}).derivative(2.0) == 12.0);
}

TEST_CASE("derivative matches central differences on a grid") {
    const double step = 1e-5;
    const auto check_fn = [&](const VorticityFn& f) {
        for (int i = 0; i < 100; ++i) {
            const double p = -10.0 + 20.0 * i / 99.0;
            const double fd = (f.value(p + step) - f.value(p - step)) / (2.0 * step);
            const double exact = f.derivative(p);
            const double scale = std::max({1.0, std::abs(exact), std::abs(fd)});
            CHECK(std::abs(fd - exact) <= 1e-6 * scale);
        }
    };
    check_fn(VorticityFn::zero());
    check_fn(VorticityFn::linear(2.0, 1.0));
    check_fn(VorticityFn::linear(-0.3, 4.0));
    check_fn(VorticityFn::polynomial({1.0, 0.0, 3.0}));
    check_fn(VorticityFn::polynomial({0.5, -2.0, 0.0, 1.0, 0.25}));
}

TEST_CASE("constant polynomial equals linear with zero slope") {
    const auto p = VorticityFn::polynomial({3.25});
    const auto l = VorticityFn::linear(0.0, 3.25);
    for (int i = 0; i < 100; ++i) {
        const double x = -10.0 + 20.0 * i / 99.0;
        CHECK(p.value(x) == l.value(x));
        CHECK(p.derivative(x) == l.derivative(x));
    }
}

TEST_CASE("antiderivative differentiates back to the value") {
    const auto f = VorticityFn::polynomial({0.5, -2.0, 0.0, 1.0});
    const double step = 1e-6;
    for (int i = 0; i < 50; ++i) {
        const double p = -3.0 + 6.0 * i / 49.0;
        const double fd =
            (f.antiderivative(p + step) - f.antiderivative(p - step)) / (2.0 * step);
        CHECK(std::abs(fd - f.value(p)) <= 1e-7 * std::max(1.0, std::abs(fd)));
    }
    CHECK(f.antiderivative(0.0) == 0.0);
}
