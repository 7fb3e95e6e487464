#pragma once

#include <cmath>
#include <vector>

#include "vorwave/errors.hpp"

namespace vorwave {

/// Even periodic function as a finite cosine series,
///   f(X) = sum_k a_k cos(k tau X),  tau = 2 pi / Lambda.
/// This is the surface-elevation representation: evenness is structural.
class CosineSeries {
public:
    CosineSeries() : lambda_(2.0 * M_PI), coeffs_{0.0} {}
    CosineSeries(double period, std::vector<double> coeffs)
        : lambda_(period), coeffs_(std::move(coeffs)) {
        if (!(period > 0.0)) throw Error("cosine series needs a positive period");
        if (coeffs_.empty()) coeffs_.push_back(0.0);
    }

    double period() const { return lambda_; }
    double base_frequency() const { return 2.0 * M_PI / lambda_; }
    const std::vector<double>& coefficients() const { return coeffs_; }
    double coefficient(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : 0.0;
    }

    double value(double x) const {
        const double tau = base_frequency();
        double acc = 0.0;
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            acc += coeffs_[k] * std::cos(k * tau * x);
        return acc;
    }

    double derivative(double x) const {
        const double tau = base_frequency();
        double acc = 0.0;
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            acc -= coeffs_[k] * k * tau * std::sin(k * tau * x);
        return acc;
    }

    double second_derivative(double x) const {
        const double tau = base_frequency();
        double acc = 0.0;
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            acc -= coeffs_[k] * k * tau * k * tau * std::cos(k * tau * x);
        return acc;
    }

    double min_value(int samples = 2048) const {
        double m = value(0.0);
        for (int i = 1; i <= samples; ++i)
            m = std::min(m, value(lambda_ * i / samples));
        return m;
    }

    double sup_abs(int samples = 2048) const {
        double m = 0.0;
        for (int i = 0; i <= samples; ++i)
            m = std::max(m, std::abs(value(lambda_ * i / samples)));
        return m;
    }

private:
    double lambda_;
    std::vector<double> coeffs_;
};

/// Collocation operators on the half-period cell [0, L/2] with nodes
/// X_i = i (L/2)/n, i = 0..n. Even grid functions are cosine polynomials
/// sum c_k cos(k tau X); odd ones are sine polynomials vanishing at both
/// ends. Differentiation is exact on the representable basis.
class HalfCellSpectral {
public:
    HalfCellSpectral(int n, double period) : n_(n), period_(period) {
        if (n < 4) throw Error("half-cell grid needs at least 5 columns");
    }

    int columns() const { return n_ + 1; }
    double node(int i) const { return 0.5 * period_ * i / n_; }
    double period() const { return period_; }

    /// DCT-I analysis: values of an even grid function -> cosine coefficients.
    std::vector<double> cosine_coefficients(const std::vector<double>& v) const {
        std::vector<double> c(n_ + 1);
        for (int k = 0; k <= n_; ++k) {
            double acc = 0.5 * (v[0] + ((k % 2) ? -v[n_] : v[n_]));
            for (int i = 1; i < n_; ++i)
                acc += v[i] * std::cos(M_PI * k * i / n_);
            c[k] = 2.0 * acc / n_;
            if (k == 0 || k == n_) c[k] *= 0.5;
        }
        return c;
    }

    /// Synthesis of a cosine-coefficient vector at the nodes.
    std::vector<double> cosine_values(const std::vector<double>& c) const {
        std::vector<double> v(n_ + 1, 0.0);
        for (int i = 0; i <= n_; ++i)
            for (int k = 0; k <= n_; ++k)
                v[i] += c[k] * std::cos(M_PI * k * i / n_);
        return v;
    }

    /// d/dX of an even grid function; the result is odd (zero at both ends).
    std::vector<double> d_even(const std::vector<double>& v) const {
        const auto c = cosine_coefficients(v);
        const double tau = 2.0 * M_PI / period_;
        std::vector<double> out(n_ + 1, 0.0);
        for (int i = 0; i <= n_; ++i) {
            double acc = 0.0;
            for (int k = 1; k <= n_; ++k)
                acc -= c[k] * k * tau * std::sin(M_PI * k * i / n_);
            out[i] = acc;
        }
        return out;
    }

    /// d^2/dX^2 of an even grid function (even result).
    std::vector<double> dd_even(const std::vector<double>& v) const {
        auto c = cosine_coefficients(v);
        const double tau = 2.0 * M_PI / period_;
        for (int k = 0; k <= n_; ++k) c[k] *= -(k * tau) * (k * tau);
        return cosine_values(c);
    }

    /// DST-I analysis of an odd grid function (v[0] = v[n] = 0 assumed).
    std::vector<double> sine_coefficients(const std::vector<double>& v) const {
        std::vector<double> b(n_, 0.0); // modes k = 1..n-1 stored at [k]
        for (int k = 1; k < n_; ++k) {
            double acc = 0.0;
            for (int i = 1; i < n_; ++i)
                acc += v[i] * std::sin(M_PI * k * i / n_);
            b[k] = 2.0 * acc / n_;
        }
        return b;
    }

    /// d/dX of an odd grid function; the result is even.
    std::vector<double> d_odd(const std::vector<double>& v) const {
        const auto b = sine_coefficients(v);
        const double tau = 2.0 * M_PI / period_;
        std::vector<double> out(n_ + 1, 0.0);
        for (int i = 0; i <= n_; ++i) {
            double acc = 0.0;
            for (int k = 1; k < n_; ++k)
                acc += b[k] * k * tau * std::cos(M_PI * k * i / n_);
            out[i] = acc;
        }
        return out;
    }

private:
    int n_;
    double period_;
};

} // namespace vorwave
