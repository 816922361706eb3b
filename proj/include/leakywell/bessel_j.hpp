// leakywell: semi-analytic drawdown solver for leaky unconfined aquifers
// SPDX-License-Identifier: MIT
//
// First-kind Bessel functions J0, J1, general real order J_nu (real
// argument), and the positive zeros of J0.
//
// Evaluation plan, chosen so no range relies on an external library:
//   x <= 9      ascending power series (cancellation bounded: the largest
//               term at x = 9 is ~3e2, so the absolute error stays ~1e-14);
//   9 < x <= 18 Hankel asymptotic amplitude/phase P, Q evaluated from
//               Chebyshev tables fitted offline at 30-digit precision
//               (scripts/gen_reference_values.py), max fit error < 1e-17;
//   x > 18      plain asymptotic P/Q series truncated at its smallest term
//               (remainder ~ e^{-2x} < 3e-16 at x = 18).
// General order: series for x <= 17; Hankel asymptotic series when it
// converges (x >= max(18, nu^2)); otherwise downward (Miller) recurrence
// normalized against the fractional-order series/asymptotic anchor.
//
// J0 zeros: frozen 30-digit table for k <= 20, McMahon's expansion beyond
// (relative error < 1e-16 at k = 21, decreasing in k), so zero locations do
// not inherit rounding from the J0 evaluator.

#pragma once

#include <cmath>
#include <vector>

#include "leakywell/core.hpp"
#include "leakywell/detail/bessel_asym_coeffs.hpp"

namespace leakywell {

namespace detail {

template <std::size_t N>
inline double cheb_eval(const double (&c)[N], double t) {
    double b0 = 0.0, b1 = 0.0;
    for (std::size_t j = N; j-- > 1;) {
        double b2 = b1;
        b1 = b0;
        b0 = 2.0 * t * b1 - b2 + c[j];
    }
    return t * b0 - b1 + c[0];  // c[0] stored pre-halved
}

/// Truncated asymptotic P/Q series; mu4 = 4 nu^2.  Converges (to double
/// rounding) for x >= max(18, nu^2).
inline void j_asym_pq_series(double mu4, double x, double& p, double& q) {
    p = 1.0;
    q = 0.0;
    double term = 1.0;
    double sq = 1.0, sp = -1.0;
    for (int m = 1; m <= 40; ++m) {
        double next = term * (mu4 - (2.0 * m - 1.0) * (2.0 * m - 1.0)) / (m * 8.0 * x);
        if (std::abs(next) >= std::abs(term) && m > 2) break;  // smallest term reached
        term = next;
        if (m % 2 == 1) {
            q += sq * term;
            sq = -sq;
        } else {
            p += sp * term;
            sp = -sp;
        }
        if (std::abs(term) < 1e-18) break;
    }
}

/// Hankel asymptotic amplitude/phase for nu in {0,1}, valid x > 9.
inline void j_asym_pq01(int nu, double x, double& p, double& q) {
    if (x <= 18.0) {
        double w = (9.0 / x) * (9.0 / x);
        double t = (2.0 * w - 1.25) / 0.75;
        p = nu == 0 ? cheb_eval(j0_asym_p, t) : cheb_eval(j1_asym_p, t);
        q = nu == 0 ? cheb_eval(j0_asym_q, t) : cheb_eval(j1_asym_q, t);
        return;
    }
    j_asym_pq_series(4.0 * nu * nu, x, p, q);
}

inline double j01_series(int nu, double x) {
    double t = 0.25 * x * x;
    double term = nu == 0 ? 1.0 : 0.5 * x;
    double sum = term;
    for (int k = 1; k <= 60; ++k) {
        term *= -t / (k * (k + nu));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
    }
    return sum;
}

}  // namespace detail

/// J0(x) for finite x >= 0.
inline double bessel_j0(double x) {
    if (!std::isfinite(x)) throw domain_error("bessel_j0: non-finite argument");
    x = std::abs(x);
    if (x <= 9.0) return detail::j01_series(0, x);
    double p, q;
    detail::j_asym_pq01(0, x, p, q);
    double chi = x - 0.25 * pi;
    return std::sqrt(2.0 / (pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

/// J1(x) for finite x >= 0.
inline double bessel_j1(double x) {
    if (!std::isfinite(x)) throw domain_error("bessel_j1: non-finite argument");
    if (x == 0.0) return 0.0;
    double ax = std::abs(x);
    double v;
    if (ax <= 9.0) {
        v = detail::j01_series(1, ax);
    } else {
        double p, q;
        detail::j_asym_pq01(1, ax, p, q);
        double chi = ax - 0.75 * pi;
        v = std::sqrt(2.0 / (pi * ax)) * (p * std::cos(chi) - q * std::sin(chi));
    }
    return x < 0.0 ? -v : v;
}

namespace detail {

/// Ascending series for general real order nu >= 0, x <= ~17.
inline double jnu_series(double nu, double x) {
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    double t = 0.25 * x * x;
    // leading factor (x/2)^nu / Gamma(nu+1), in log form for large nu
    double lead = std::exp(nu * std::log(0.5 * x) - std::lgamma(nu + 1.0));
    if (lead == 0.0) return 0.0;  // underflow: the true value is below 1e-308
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 200; ++k) {
        term *= -t / (k * (nu + k));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
    }
    return lead * sum;
}

inline double jnu_asymptotic(double nu, double x) {
    double p, q;
    j_asym_pq_series(4.0 * nu * nu, x, p, q);
    double chi = x - (2.0 * nu + 1.0) * 0.25 * pi;
    return std::sqrt(2.0 / (pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace detail

/// J_nu(x) for real order nu >= 0 and finite x >= 0.
///
/// Accuracy: full double precision for nu in {0,1}; for general order,
/// ~1e-13 relative away from zeros (the Miller branch is normalization-
/// limited; the gap 15 < x < 18 of the fractional-order anchor costs a few
/// digits of its absolute accuracy, ~1e-10 worst case).
inline double bessel_j(BesselOrder order, double x) {
    order.validate();
    double nu = order.value;
    if (!std::isfinite(x) || x < 0.0) throw domain_error("bessel_j: x must be finite and >= 0");
    if (nu == 0.0) return bessel_j0(x);
    if (nu == 1.0) return bessel_j1(x);
    if (x <= 17.0 && nu <= 120.0) return detail::jnu_series(nu, x);
    if (x >= 18.0 && x >= nu * nu) return detail::jnu_asymptotic(nu, x);

    // Miller downward recurrence: run j_{k-1} = (2k/x) j_k - j_{k+1} from a
    // start order well above both nu and x, normalize at the fractional
    // anchor order mu in [0,1).
    double mu = nu - std::floor(nu);
    int steps_to_nu = static_cast<int>(std::llround(nu - mu));
    int start = steps_to_nu + static_cast<int>(x) + 40;
    double jp = 0.0, jc = 1e-290, at_nu = 0.0;
    for (int k = start; k >= 1; --k) {
        double ordr = mu + k;
        double jm = (2.0 * ordr / x) * jc - jp;
        jp = jc;
        jc = jm;
        if (k - 1 == steps_to_nu) at_nu = jc;
        if (std::abs(jc) > 1e250) {  // rescale both carries and the tap
            jp /= 1e250;
            jc /= 1e250;
            at_nu /= 1e250;
        }
    }
    double anchor = (x <= 17.0) ? detail::jnu_series(mu, x) : detail::jnu_asymptotic(mu, x);
    if (jc == 0.0) throw convergence_error("bessel_j: Miller normalization degenerate", {}, start);
    return at_nu * (anchor / jc);
}

/// k-th positive zero of J0 (k >= 1), to better than 1e-12 relative.
inline double j0_zeros(int k) {
    if (k < 1) throw domain_error("j0_zeros: k must be >= 1");
    if (k <= 20) return detail::j0_zero_table[k - 1];
    double b = (k - 0.25) * pi;
    double e2 = 1.0 / (64.0 * b * b);
    // McMahon's expansion in 1/(8b)^2
    return b + (1.0 / (8.0 * b)) * (1.0 + e2 * (-124.0 / 3.0 + e2 * (120928.0 / 15.0 + e2 * (-401743168.0 / 105.0 + e2 * 1071187749376.0 / 315.0))));
}

}  // namespace leakywell
