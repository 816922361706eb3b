// leakywell: semi-analytic drawdown solver for leaky unconfined aquifers
// SPDX-License-Identifier: MIT
//
// Modified Bessel functions of complex argument: K0/K1 (the Laplace-domain
// source kernels) and the general real-order pair (I_nu, K_nu) needed by the
// unsaturated-zone solution.
//
// Method (Temme, J. Comput. Phys. 19 (1975) 324; continued-fraction scheme
// as in Thompson & Barnett / Numerical Recipes "bessik", carried over to
// complex argument):
//   |z| <= 2   Temme's series for K_mu, K_{mu+1} with |mu| <= 1/2;
//   |z| >  2   Steed's continued fraction CF2, evaluated in e^{+z}-scaled
//              form so only the exponent carries the decay;
//   order recurrence K_{nu+1} = K_{nu-1} + (2 nu / z) K_nu upward (stable),
//              in exponent-carrying arithmetic;
//   I_nu       from the CF1 ratio r = I_{nu+1}/I_nu (modified Lentz) and the
//              Wronskian I_nu(z) [K_{nu+1}(z) + r K_nu(z)] = 1/z.
//
// The upstream oscillatory solutions appear as J_nu and Y_nu of purely
// imaginary argument; those are intrinsically modified-Bessel values via
//   J_nu(i w) = e^{ i nu pi / 2} I_nu(w),
//   Y_nu(i w) = e^{ i (nu+1) pi / 2} I_nu(w) - (2/pi) e^{-i nu pi / 2} K_nu(w),
// so every such combination with real-valued physics is formed directly in
// the (I_nu, K_nu) basis here and never through complex-phase J/Y values.
//
// Scaling convention: results are scaled_complex, value = mantissa *
// exp(log_scale).  For z in the right half-plane K_nu carries log_scale
// ~ -Re z and I_nu carries ~ +Re z, so ratios and Wronskian-type products
// cancel exponents exactly instead of under/overflowing.

#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "leakywell/core.hpp"
#include "leakywell/scaled_value.hpp"

namespace leakywell {

namespace detail {

/// gamma1 = [1/Gamma(1-mu) - 1/Gamma(1+mu)]/(2 mu) and
/// gamma2 = [1/Gamma(1-mu) + 1/Gamma(1+mu)]/2 for |mu| <= 1/2.
inline void temme_gammas(double mu, double& g1, double& g2) {
    double gp = 1.0 / std::tgamma(1.0 + mu);
    double gm = 1.0 / std::tgamma(1.0 - mu);
    g2 = 0.5 * (gm + gp);
    if (std::abs(mu) > 1e-4) {
        g1 = (gm - gp) / (2.0 * mu);
    } else {
        // 1/Gamma(1+t) = 1 + gamma t + c2 t^2 + c3 t^3 + ...; the odd part
        // gives g1 = -gamma - c3 mu^2 with error O(mu^4) < 1e-17 here.
        constexpr double euler_gamma = 0.5772156649015329;
        constexpr double c3 = -0.0420026350340952;
        g1 = -euler_gamma - c3 * mu * mu;
    }
}

/// Temme's series: K_mu(z) and K_{mu+1}(z), |z| <= 2, |mu| <= 1/2.
inline void k_temme(double mu, cplx z, cplx& kmu, cplx& kmup1) {
    const cplx d = std::log(2.0 / z);  // principal branch, Re z >= 0
    const cplx sigma = mu * d;
    double g1, g2;
    temme_gammas(mu, g1, g2);
    const double pimu = pi * mu;
    const double fact = std::abs(pimu) < 1e-12 ? 1.0 : pimu / std::sin(pimu);
    const cplx sinhc = std::abs(sigma) < 1e-8 ? 1.0 + sigma * sigma / 6.0 : std::sinh(sigma) / sigma;
    cplx f = fact * (g1 * std::cosh(sigma) + g2 * d * sinhc);
    cplx p = 0.5 * std::exp(sigma) * std::tgamma(1.0 + mu);
    cplx q = 0.5 * std::exp(-sigma) * std::tgamma(1.0 - mu);
    const cplx z2q = 0.25 * z * z;
    cplx c = 1.0;
    cplx sum = f, sum1 = p;
    int k = 1;
    for (; k <= 120; ++k) {
        f = (static_cast<double>(k) * f + p + q) / (k * k - mu * mu);
        p /= (k - mu);
        q /= (k + mu);
        c *= z2q / static_cast<double>(k);
        const cplx del = c * f;
        sum += del;
        sum1 += c * (p - static_cast<double>(k) * f);
        if (std::abs(del) < 1e-17 * std::abs(sum) && k > 2) break;
    }
    if (k > 120) throw convergence_error("bessel_ik: Temme series stalled", sum, k);
    kmu = sum;
    kmup1 = (2.0 / z) * sum1;
}

/// Steed's CF2: e^{+z}-scaled K_mu(z) and K_{mu+1}(z), |z| > 2, Re z >= 0,
/// |mu| <= 1/2.  Outputs satisfy K = khat * e^{-z}.
inline void k_cf2_scaled(double mu, cplx z, cplx& kmu_hat, cplx& kmup1_hat) {
    const double a1 = 0.25 - mu * mu;
    cplx b = 2.0 * (1.0 + z);
    cplx d = 1.0 / b;
    cplx delh = d, h = d;
    cplx q1 = 0.0, q2 = 1.0;
    cplx q = a1, c = a1;
    double a = -a1;
    cplx s = 1.0 + q * delh;
    int i = 2;
    for (; i <= 4000; ++i) {
        a -= 2 * (i - 1);
        c = -a * c / static_cast<double>(i);
        const cplx qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const cplx dels = q * delh;
        s += dels;
        if (std::abs(dels) < 1e-16 * std::abs(s)) break;
    }
    if (i > 4000) throw convergence_error("bessel_ik: CF2 stalled", s, i);
    h = a1 * h;
    kmu_hat = std::sqrt(pi / (2.0 * z)) / s;
    kmup1_hat = kmu_hat * (mu + z + 0.5 - h) / z;
}

/// K_mu, K_{mu+1} as scaled values, any |z|, Re z >= 0, |mu| <= 1/2.
inline void k_pair_scaled(double mu, cplx z, scaled_complex& kmu, scaled_complex& kmup1) {
    if (std::abs(z) <= 2.0) {
        cplx a, b;
        k_temme(mu, z, a, b);
        kmu = scaled_complex::from(a);
        kmup1 = scaled_complex::from(b);
    } else {
        cplx a, b;
        k_cf2_scaled(mu, z, a, b);
        const cplx phase = std::exp(cplx{0.0, -z.imag()});
        kmu = scaled_complex{a * phase, -z.real()}.normalized();
        kmup1 = scaled_complex{b * phase, -z.real()}.normalized();
    }
}

/// CF1 ratio I_{nu+1}(z)/I_nu(z) by modified Lentz.
inline cplx i_ratio_cf1(double nu, cplx z) {
    constexpr double tiny = 1e-290;
    cplx f = tiny, cl = f, dl = 0.0;
    for (int j = 1; j <= 20000; ++j) {
        const cplx bj = 2.0 * (nu + j) / z;
        dl = bj + dl;
        if (dl == cplx{0.0, 0.0}) dl = tiny;
        cl = bj + 1.0 / cl;
        if (cl == cplx{0.0, 0.0}) cl = tiny;
        dl = 1.0 / dl;
        const cplx delta = cl * dl;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) return f;
    }
    throw convergence_error("bessel_ik: CF1 stalled", f, 20000);
}

inline void check_ik_argument(cplx z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw domain_error("bessel_ik: non-finite argument");
    if (z == cplx{0.0, 0.0})
        throw singularity_error("bessel_ik: K has a singularity at z = 0");
    if (z.real() < 0.0)
        throw domain_error("bessel_ik: argument must satisfy Re z >= 0");
    if (std::abs(z) < 1e-250)
        throw domain_error("bessel_ik: |z| below supported range (1e-250)");
}

}  // namespace detail

/// K0(z) and K1(z) as exponent-carrying values, Re z >= 0, z != 0.
inline std::pair<scaled_complex, scaled_complex> bessel_k01_scaled(cplx z) {
    detail::check_ik_argument(z);
    scaled_complex k0, k1;
    detail::k_pair_scaled(0.0, z, k0, k1);
    return {k0, k1};
}

/// K_order(z), order in {0,1}; plain value (underflows to 0 for Re z large).
inline cplx bessel_k_complex(int order, cplx z) {
    if (order != 0 && order != 1) throw domain_error("bessel_k_complex: order must be 0 or 1");
    auto [k0, k1] = bessel_k01_scaled(z);
    return order == 0 ? k0.to_complex() : k1.to_complex();
}

/// e^{z} K_order(z): the scaled variant for large |z|, immune to underflow.
inline cplx bessel_k_complex_scaled(int order, cplx z) {
    if (order != 0 && order != 1) throw domain_error("bessel_k_complex: order must be 0 or 1");
    auto [k0, k1] = bessel_k01_scaled(z);
    const scaled_complex& k = order == 0 ? k0 : k1;
    return k.scaled_by_exp(z.real()).to_complex() * std::exp(cplx{0.0, z.imag()});
}

/// Result of bessel_modified_general: consecutive-order I and K values.
struct ModifiedBesselResult {
    scaled_complex i_nu;     ///< I_nu(z)
    scaled_complex i_nup1;   ///< I_{nu+1}(z)
    scaled_complex k_nu;     ///< K_nu(z)
    scaled_complex k_nup1;   ///< K_{nu+1}(z)
};

/// I_nu(z), K_nu(z) (plus the nu+1 companions) for real nu >= 0, Re z >= 0.
///
/// Orders are capped at 2e4: the upward K recurrence is O(nu) work and
/// nothing in the flow model approaches that order.
inline ModifiedBesselResult bessel_modified_general(BesselOrder order, cplx z) {
    order.validate();
    const double nu = order.value;
    if (nu > 2e4) throw domain_error("bessel_modified_general: order above supported cap 2e4");
    detail::check_ik_argument(z);

    const int nl = static_cast<int>(nu + 0.5);
    const double mu = nu - nl;  // in [-1/2, 1/2)
    scaled_complex kmu, kmup1;
    detail::k_pair_scaled(mu, z, kmu, kmup1);
    for (int j = 1; j <= nl; ++j) {
        scaled_complex knext = kmu + kmup1 * (2.0 * (mu + j) / z);
        kmu = kmup1;
        kmup1 = knext;
    }

    const cplx r = detail::i_ratio_cf1(nu, z);
    const scaled_complex denom = (kmup1 + kmu * r) * z;
    const scaled_complex inu = scaled_complex::from(1.0) / denom;

    return {inu, inu * r, kmu, kmup1};
}

}  // namespace leakywell
