// leakywell: semi-analytic drawdown solver for leaky unconfined aquifers
// SPDX-License-Identifier: MIT
//
// Leaky aquitard below the pumped aquifer, no-flow at its bottom (depth
// R_b below the interface, possibly infinite).  In the doubly transformed
// domain the aquitard solution on z_D in [-R_b, 0] is
//     s1(z_D) = s(0) cosh(mu1 (z_D + R_b)) / cosh(mu1 R_b),
//     mu1^2  = y^2 R_Kr / R_Kz + beta R_Ss / (K_D r_D^2 R_Kz),
// and the saturated zone sees it only through the interface admittance
//     q1b = R_Kz mu1 tanh(mu1 R_b)      (tanh -> 1 as R_b -> inf).
//
// mu1 is assembled from the conductivity ratios directly (rather than from
// the anisotropy-ratio combinations R_KD = R_Kz/R_Kr and R_alpha_s, which
// become 0/0 when R_Kr = 0).  R_Kz = 0 seals the base: q1b is identically
// zero, mu1 is never formed, and no drawdown enters the aquitard.

#pragma once

#include <cmath>
#include <complex>

#include "leakywell/core.hpp"
#include "leakywell/hyperbolic.hpp"
#include "leakywell/model_types.hpp"

namespace leakywell {

/// mu1 (principal branch); requires a conductive base, R_Kz > 0.
inline cplx aquitard_mu1(const DimensionlessGroups& g, cplx beta, double y, double r_D) {
    if (g.R_Kz <= 0.0) throw domain_error("aquitard_mu1: requires R_Kz > 0");
    if (!(beta.real() > 0)) throw domain_error("aquitard_mu1: Re beta must be positive");
    return std::sqrt(y * y * (g.R_Kr / g.R_Kz) + beta * (g.R_Ss / (g.K_D * r_D * r_D * g.R_Kz)));
}

/// Interface admittance q1b = R_Kz mu1 tanh(mu1 R_b); 0 for a sealed base.
inline cplx aquitard_q1b(const DimensionlessGroups& g, cplx beta, double y, double r_D) {
    if (g.R_Kz == 0.0) return cplx{0.0, 0.0};
    const cplx mu1 = aquitard_mu1(g, beta, y, r_D);
    const cplx t = is_infinite_extent(g.R_b) ? cplx{1.0, 0.0} : stable_tanh(mu1 * g.R_b);
    return g.R_Kz * mu1 * t;
}

/// Vertical shape s1(z_D)/s1(0) for z_D in [-R_b, 0].
inline cplx aquitard_ratio(const DimensionlessGroups& g, cplx beta, double y, double r_D, double z_D) {
    if (g.R_Kz <= 0.0) throw domain_error("aquitard_ratio: requires R_Kz > 0");
    if (z_D > 0.0) throw domain_error("aquitard_ratio: z_D must be <= 0");
    if (!is_infinite_extent(g.R_b) && z_D < -g.R_b)
        throw domain_error("aquitard_ratio: z_D below the aquitard base");
    const cplx mu1 = aquitard_mu1(g, beta, y, r_D);
    if (is_infinite_extent(g.R_b)) return std::exp(mu1 * z_D);  // Re mu1 > 0, z_D <= 0
    return stable_cosh_ratio(mu1 * (z_D + g.R_b), mu1 * g.R_b);
}

}  // namespace leakywell
