// leakywell: semi-analytic drawdown solver for leaky unconfined aquifers
// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <complex>

#include "leakywell/core.hpp"

namespace leakywell {

/// tanh(z) for complex z, saturating to +/-1 for large |Re z| instead of
/// overflowing.  Accepts the +inf sentinel (used for an unbounded aquitard,
/// where tanh(mu1 * R_b) -> 1).
inline cplx stable_tanh(cplx z) {
    if (std::isinf(z.real())) return cplx{z.real() > 0 ? 1.0 : -1.0, 0.0};
    if (std::abs(z.real()) > 20.0) {
        // |e^{-2|Re z|}| < 5e-18: the correction term is below double rounding
        double sgn = z.real() > 0 ? 1.0 : -1.0;
        cplx e = std::exp(-2.0 * sgn * z);
        return sgn * (1.0 - 2.0 * e);
    }
    return std::tanh(z);
}

/// cosh(num_arg)/cosh(den_arg) evaluated through factored exponentials so
/// that nothing overflows as long as Re(num_arg) <= Re(den_arg) (the only
/// regime the aquitard profile produces: num_arg = mu1 (z_D + R_b),
/// den_arg = mu1 R_b with z_D in [-R_b, 0]).
///
/// If den_arg carries the +inf sentinel in its real part, the ratio is the
/// deep-aquitard limit e^{num_arg - den_arg} collapsed to e^{mu1 z_D}; the
/// caller passes that exponent difference via num_arg with den_arg = +inf
/// handled explicitly in the aquitard module, so here we only special-case
/// both-infinite to 1.
inline cplx stable_cosh_ratio(cplx num_arg, cplx den_arg) {
    if (num_arg == den_arg) return cplx{1.0, 0.0};
    // cosh(a)/cosh(b) = e^{a-b} (1 + e^{-2a}) / (1 + e^{-2b}),  Re a, Re b >= 0
    // Mirror arguments into the right half plane first (cosh is even).
    if (num_arg.real() < 0.0) num_arg = -num_arg;
    if (den_arg.real() < 0.0) den_arg = -den_arg;
    cplx ea = std::exp(num_arg - den_arg);
    cplx na = (num_arg.real() > 350.0) ? cplx{0.0, 0.0} : std::exp(-2.0 * num_arg);
    cplx nb = (den_arg.real() > 350.0) ? cplx{0.0, 0.0} : std::exp(-2.0 * den_arg);
    return ea * (1.0 + na) / (1.0 + nb);
}

}  // namespace leakywell
