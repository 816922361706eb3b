// leakywell: semi-analytic drawdown solver for leaky unconfined aquifers
// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <complex>

#include "leakywell/core.hpp"

namespace leakywell {

/// Complex number carried as mantissa * exp(log_scale), with a real
/// log-scale.  Used by the modified-Bessel recurrences and the vadose-zone
/// profile ratios, whose intermediates overflow double range long before
/// the final ratios leave it.
struct scaled_complex {
    cplx mantissa{0.0, 0.0};
    double log_scale = 0.0;  ///< natural log of the carried magnitude factor

    static scaled_complex from(cplx v) { return scaled_complex{v, 0.0}.normalized(); }

    [[nodiscard]] scaled_complex normalized() const {
        scaled_complex r = *this;
        double m = std::abs(r.mantissa);
        if (m == 0.0) {
            r.log_scale = 0.0;
            return r;
        }
        if (m > 1e100 || m < 1e-100) {
            double shift = std::log(m);
            r.mantissa /= std::exp(shift);
            r.log_scale += shift;
        }
        return r;
    }

    [[nodiscard]] cplx to_complex() const { return mantissa * std::exp(log_scale); }

    [[nodiscard]] bool is_zero() const { return mantissa == cplx{0.0, 0.0}; }

    friend scaled_complex operator*(const scaled_complex& a, const scaled_complex& b) {
        return scaled_complex{a.mantissa * b.mantissa, a.log_scale + b.log_scale}.normalized();
    }

    friend scaled_complex operator*(const scaled_complex& a, cplx b) {
        return scaled_complex{a.mantissa * b, a.log_scale}.normalized();
    }

    friend scaled_complex operator/(const scaled_complex& a, const scaled_complex& b) {
        return scaled_complex{a.mantissa / b.mantissa, a.log_scale - b.log_scale}.normalized();
    }

    friend scaled_complex operator+(const scaled_complex& a, const scaled_complex& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        // bring both to the larger scale; the smaller one may flush to zero
        if (a.log_scale >= b.log_scale) {
            double d = b.log_scale - a.log_scale;
            cplx add = (d < -745.0) ? cplx{0.0, 0.0} : b.mantissa * std::exp(d);
            return scaled_complex{a.mantissa + add, a.log_scale}.normalized();
        }
        return b + a;
    }

    friend scaled_complex operator-(const scaled_complex& a, const scaled_complex& b) {
        return a + scaled_complex{-b.mantissa, b.log_scale};
    }

    /// Multiply by exp(delta) for real delta without forming exp(delta).
    [[nodiscard]] scaled_complex scaled_by_exp(double delta) const {
        return scaled_complex{mantissa, log_scale + delta}.normalized();
    }
};

}  // namespace leakywell
