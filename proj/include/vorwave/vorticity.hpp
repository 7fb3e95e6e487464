#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "vorwave/errors.hpp"

namespace vorwave {

/// Closed-form vorticity function omega(p) evaluated at stream-function
/// values, together with its exact derivative. Only closed forms are
/// supported so that every downstream derivative is exact; tabulated data
/// is deliberately rejected.
class VorticityFn {
public:
    enum class Kind { zero, linear, polynomial };

    VorticityFn() : kind_(Kind::zero) {}

    static VorticityFn zero() { return VorticityFn(); }

    /// omega(p) = a*p + b
    static VorticityFn linear(double a, double b) {
        VorticityFn f;
        f.kind_ = Kind::linear;
        f.coeffs_ = {b, a}; // constant-first
        return f;
    }

    /// omega(p) = c[0] + c[1]*p + c[2]*p^2 + ...  (constant-first)
    static VorticityFn polynomial(std::vector<double> coeffs) {
        VorticityFn f;
        f.kind_ = Kind::polynomial;
        if (coeffs.empty()) coeffs.push_back(0.0);
        f.coeffs_ = std::move(coeffs);
        return f;
    }

    Kind kind() const { return kind_; }
    const std::vector<double>& coefficients() const { return coeffs_; }

    /// omega(p)
    double value(double p) const {
        switch (kind_) {
        case Kind::zero:
            return 0.0;
        case Kind::linear:
            return coeffs_[1] * p + coeffs_[0];
        case Kind::polynomial: {
            double acc = 0.0; // Horner, highest degree first
            for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
                acc = acc * p + *it;
            return acc;
        }
        }
        return 0.0;
    }

    /// omega'(p)
    double derivative(double p) const {
        switch (kind_) {
        case Kind::zero:
            return 0.0;
        case Kind::linear:
            return coeffs_[1];
        case Kind::polynomial: {
            double acc = 0.0;
            const auto n = coeffs_.size();
            for (std::size_t k = n; k-- > 1;)
                acc = acc * p + static_cast<double>(k) * coeffs_[k];
            return acc;
        }
        }
        return 0.0;
    }

    /// Antiderivative with W(0) = 0; used by energy-balance diagnostics.
    double antiderivative(double p) const {
        switch (kind_) {
        case Kind::zero:
            return 0.0;
        case Kind::linear:
            return 0.5 * coeffs_[1] * p * p + coeffs_[0] * p;
        case Kind::polynomial: {
            double acc = 0.0;
            const auto n = coeffs_.size();
            for (std::size_t k = n; k-- > 0;)
                acc = acc * p + coeffs_[k] / static_cast<double>(k + 1);
            return acc * p;
        }
        }
        return 0.0;
    }

private:
    Kind kind_;
    std::vector<double> coeffs_;
};

} // namespace vorwave
