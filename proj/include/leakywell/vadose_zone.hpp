// leakywell: semi-analytic drawdown solver for leaky unconfined aquifers
// SPDX-License-Identifier: MIT
//
// Linearized unsaturated-zone flow above the water table (Gardner-type
// exponential conductivity/capacity profiles).  In the doubly transformed
// domain, the vadose solution sigma(z_D) on z_D in [1, 1 + L_D] satisfies a
// modified Helmholtz equation with exponentially varying coefficients; the
// saturated zone only needs the water-table admittance
//     q_D = sigma'(1) / sigma(1),
// and the vadose field itself only the normalized profile
//     P(z_D) = sigma(z_D) / sigma(1).
//
// With kappa = a_kD, lambda = a_kD - a_cD and
//     B_D = beta S_D a_cD e^{a_kD (psi_kD - psi_aD)} / (K_D r_D^2),
// two analytic branches arise:
//
//  * equal exponents (lambda = 0): exponential solutions
//        delta_{1,2} = (kappa -/+ sqrt(kappa^2 + 4 (B_D + y^2))) / 2,
//    with delta_1 the decaying root (Re delta_1 < 0 when Re beta > 0);
//    delta_1 is evaluated as -2 (B_D + y^2) / (kappa + root) to avoid the
//    kappa - root cancellation at large kappa.
//
//  * distinct exponents: order nu = sqrt(a_kD^2 + 4 y^2) / |lambda| modified
//    Bessel solutions in phi(x) = phi_0 e^{lambda x / 2},
//    phi_0 = 2 sqrt(B_D) / |lambda|, x = z_D - 1, carrying a factor
//    e^{kappa x / 2}.  For a semi-infinite column the upward-decaying basis
//    member depends on the sign of lambda: phi grows upward for lambda > 0
//    (K_nu decays) and shrinks upward for lambda < 0 (I_nu decays, since the
//    prefactor e^{kappa x/2} must be beaten).  A finite column instead takes
//    Z = I_nu + chi K_nu with chi fixed by no flow at the land surface.
//
// As lambda -> 0 the Bessel order nu diverges while the solution tends
// continuously to the equal-exponent branch; orders beyond 1e4 are therefore
// rerouted to that branch (the uniform-asymptotic regime where the two agree
// to far better than the evaluation tolerance).

#pragma once

#include <cmath>
#include <complex>

#include "leakywell/bessel_ik.hpp"
#include "leakywell/core.hpp"
#include "leakywell/model_types.hpp"
#include "leakywell/scaled_value.hpp"

namespace leakywell {

/// Coefficient of the second-kind basis member in Z = I_nu + chi K_nu (or in
/// the exponential pair for equal exponents).  The semi-infinite
/// lambda > 0 column is spanned by K_nu alone, which has no finite chi in
/// this normalization; it is flagged instead of encoded as an infinity.
struct VadoseChi {
    cplx chi{0.0, 0.0};
    bool k_dominant = false;
};

namespace detail {

inline constexpr double vadose_order_cap = 1e4;

struct VadoseFrame {
    double lam = 0.0;    ///< a_kD - a_cD
    double kappa = 0.0;  ///< a_kD
    cplx by2;            ///< B_D + y^2
    bool equal = false;  ///< equal-exponent branch (incl. order-cap reroute)
    double nu = 0.0;     ///< Bessel order (distinct branch only)
    cplx phi0;           ///< 2 sqrt(B_D) / |lambda| (distinct branch only)
};

inline VadoseFrame vadose_frame(const DimensionlessGroups& g, cplx beta, double y, double r_D) {
    if (!(beta.real() > 0)) throw domain_error("vadose: Re beta must be positive");
    if (!(y >= 0.0) || !std::isfinite(y)) throw domain_error("vadose: y must be >= 0 and finite");
    VadoseFrame fr;
    fr.lam = g.lambda_D();
    fr.kappa = g.kappa_D();
    const cplx B_D = g.B_D(beta, r_D);
    fr.by2 = B_D + y * y;
    if (g.equal_exponents()) {
        fr.equal = true;
        return fr;
    }
    fr.nu = std::sqrt(fr.kappa * fr.kappa + 4.0 * y * y) / std::abs(fr.lam);
    if (fr.nu > vadose_order_cap) {
        fr.equal = true;  // lambda -> 0 limit; see header note
        return fr;
    }
    fr.phi0 = 2.0 * std::sqrt(B_D) / std::abs(fr.lam);
    return fr;
}

/// Exponential-branch roots; delta1 decaying, delta2 growing.
inline std::pair<cplx, cplx> equal_deltas(const VadoseFrame& fr) {
    const cplx root = std::sqrt(fr.kappa * fr.kappa + 4.0 * fr.by2);
    const cplx d1 = -2.0 * fr.by2 / (fr.kappa + root);
    const cplx d2 = (fr.kappa + root) / 2.0;
    return {d1, d2};
}

/// chi of the finite-column combination Z = I_nu + chi K_nu, kept scaled:
/// |chi| ~ e^{2 Re phi_L} overflows a plain double for long columns.
inline scaled_complex bessel_chi_scaled(const VadoseFrame& fr, double L_D) {
    const cplx phiL = fr.phi0 * std::exp(fr.lam * L_D / 2.0);
    const cplx anl = fr.kappa + fr.nu * fr.lam;
    const ModifiedBesselResult mb = bessel_modified_general(BesselOrder{fr.nu}, phiL);
    const scaled_complex num = mb.i_nu * anl + mb.i_nup1 * (fr.lam * phiL);
    const scaled_complex den = mb.k_nu * anl - mb.k_nup1 * (fr.lam * phiL);
    if (den.is_zero()) throw singularity_error("vadose: land-surface condition degenerate");
    return (num * cplx{-1.0, 0.0}) / den;
}

}  // namespace detail

/// Basis-combination coefficient per the branch case table.
inline VadoseChi vadose_chi(const DimensionlessGroups& g, cplx beta, double y, double r_D) {
    g.validate();
    const detail::VadoseFrame fr = detail::vadose_frame(g, beta, y, r_D);
    if (fr.equal) {
        if (is_infinite_extent(g.L_D)) return {cplx{0.0, 0.0}, false};
        const auto [d1, d2] = detail::equal_deltas(fr);
        return {-(d1 / d2) * std::exp((d1 - d2) * g.L_D), false};
    }
    if (is_infinite_extent(g.L_D)) {
        // Decaying basis member alone: K_nu when lambda > 0, I_nu otherwise.
        return {cplx{0.0, 0.0}, fr.lam > 0.0};
    }
    return {detail::bessel_chi_scaled(fr, g.L_D).to_complex(), false};
}

/// Water-table admittance sigma'(1)/sigma(1).  Negative real part for
/// Re beta > 0 (the vadose zone accepts water released at the table).
inline cplx vadose_qD(const DimensionlessGroups& g, cplx beta, double y, double r_D) {
    g.validate();
    const detail::VadoseFrame fr = detail::vadose_frame(g, beta, y, r_D);
    if (fr.equal) {
        const auto [d1, d2] = detail::equal_deltas(fr);
        if (is_infinite_extent(g.L_D)) return d1;
        const cplx chi = -(d1 / d2) * std::exp((d1 - d2) * g.L_D);
        const cplx den = 1.0 + chi;
        if (den == cplx{0.0, 0.0}) throw singularity_error("vadose: equal-branch chi = -1");
        return (d1 + chi * d2) / den;
    }
    const cplx anl = fr.kappa + fr.nu * fr.lam;
    const cplx half_lp = fr.lam * fr.phi0 / 2.0;
    if (is_infinite_extent(g.L_D)) {
        const ModifiedBesselResult mb = bessel_modified_general(BesselOrder{fr.nu}, fr.phi0);
        if (fr.lam > 0.0) return anl / 2.0 - half_lp * (mb.k_nup1 / mb.k_nu).to_complex();
        return anl / 2.0 + half_lp * (mb.i_nup1 / mb.i_nu).to_complex();
    }
    const scaled_complex chi = detail::bessel_chi_scaled(fr, g.L_D);
    const ModifiedBesselResult mb = bessel_modified_general(BesselOrder{fr.nu}, fr.phi0);
    const scaled_complex zn = mb.i_nu + chi * mb.k_nu;
    const scaled_complex zd = mb.i_nup1 - chi * mb.k_nup1;
    if (zn.is_zero()) throw singularity_error("vadose: Z(phi_0) vanished");
    return anl / 2.0 + half_lp * (zd / zn).to_complex();
}

/// Normalized vertical profile sigma(z_D)/sigma(1) for z_D in [1, 1 + L_D].
inline cplx vadose_profile(const DimensionlessGroups& g, cplx beta, double y, double r_D, double z_D) {
    g.validate();
    if (z_D < 1.0) throw domain_error("vadose_profile: z_D must be >= 1");
    if (!is_infinite_extent(g.L_D) && z_D > 1.0 + g.L_D)
        throw domain_error("vadose_profile: z_D exceeds the land surface");
    const double x = z_D - 1.0;
    const detail::VadoseFrame fr = detail::vadose_frame(g, beta, y, r_D);
    if (fr.equal) {
        const auto [d1, d2] = detail::equal_deltas(fr);
        if (is_infinite_extent(g.L_D)) return std::exp(d1 * x);
        const double L = g.L_D;
        const cplx r = d1 / d2;
        // every retained exponent has non-positive real part
        const cplx num = std::exp(d1 * x) - r * std::exp(d1 * L - d2 * (L - x));
        const cplx den = 1.0 - r * std::exp((d1 - d2) * L);
        if (den == cplx{0.0, 0.0}) throw singularity_error("vadose_profile: degenerate column");
        return num / den;
    }
    const cplx phix = fr.phi0 * std::exp(fr.lam * x / 2.0);
    const ModifiedBesselResult mb0 = bessel_modified_general(BesselOrder{fr.nu}, fr.phi0);
    const ModifiedBesselResult mbx = bessel_modified_general(BesselOrder{fr.nu}, phix);
    scaled_complex ratio;
    if (is_infinite_extent(g.L_D)) {
        ratio = fr.lam > 0.0 ? mbx.k_nu / mb0.k_nu : mbx.i_nu / mb0.i_nu;
    } else {
        const scaled_complex chi = detail::bessel_chi_scaled(fr, g.L_D);
        const scaled_complex z0 = mb0.i_nu + chi * mb0.k_nu;
        if (z0.is_zero()) throw singularity_error("vadose_profile: Z(phi_0) vanished");
        ratio = (mbx.i_nu + chi * mbx.k_nu) / z0;
    }
    return ratio.scaled_by_exp(fr.kappa * x / 2.0).to_complex();
}

}  // namespace leakywell
