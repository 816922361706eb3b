// leakywell: semi-analytic drawdown solver for leaky unconfined aquifers
// SPDX-License-Identifier: MIT
//
// Numerical Laplace-transform inversion.
//
// Primary route: the accelerated Fourier-series method of de Hoog, Knight &
// Stokes (SIAM J. Sci. Stat. Comput. 3, 1982): trapezoidal discretization of
// the Bromwich integral on a shifted contour, summed as a continued fraction
// built by the quotient-difference algorithm, plus their remainder
// refinement of the last convergent.
//
// Oracle route: Gaver–Stehfest (Stehfest, CACM 13, 1970), which probes the
// transform only at real p.  It is kept deliberately independent of the
// de Hoog path so the two can cross-check each other on monotone curves.
//
// Contour choice: for each evaluation time t the series period is T = 2t and
// the contour abscissa is gamma = shift_factor * log(1/rel_tol) / (2T), so
// the discretization error term e^{-2 gamma T} ~ rel_tol^shift_factor.

#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <vector>

#include "leakywell/core.hpp"

namespace leakywell {

struct LaplaceConfig {
    int n_terms = 20;  ///< Fourier series length (even); probes n_terms + 1 nodes
    double rel_tol = 1e-8;
    double contour_shift_factor = 1.0;

    void validate() const {
        if (n_terms < 8 || n_terms > 64 || n_terms % 2 != 0)
            throw domain_error("LaplaceConfig: n_terms must be even and in [8, 64]");
        if (!(rel_tol > 0.0) || rel_tol > 1e-4)
            throw domain_error("LaplaceConfig: rel_tol must be in (0, 1e-4]");
        if (!(contour_shift_factor > 0.0) || contour_shift_factor > 8.0)
            throw domain_error("LaplaceConfig: contour_shift_factor must be in (0, 8]");
    }
};

/// Invert a Laplace transform at time t > 0.  F must be analytic for
/// Re p > gamma and decay as |p| grows along the contour.
///
/// On quotient-difference breakdown (vanishing denominator) throws
/// convergence_error whose partial_result holds the unaccelerated Fourier
/// partial sum mapped to the time domain (real part in .real()).
template <class F>
double invert_laplace_dehoog(F&& transform, double t, const LaplaceConfig& cfg = LaplaceConfig{}) {
    cfg.validate();
    if (!(t > 0.0) || !std::isfinite(t)) throw domain_error("invert_laplace_dehoog: t must be positive and finite");

    const int M = cfg.n_terms / 2;
    const int n = 2 * M;  // a_0 .. a_n
    const double T = 2.0 * t;
    const double gamma = cfg.contour_shift_factor * (-std::log(cfg.rel_tol)) / (2.0 * T);

    std::vector<cplx> a(static_cast<std::size_t>(n) + 1);
    a[0] = 0.5 * transform(cplx{gamma, 0.0});
    bool all_zero = (a[0] == cplx{0.0, 0.0});
    for (int k = 1; k <= n; ++k) {
        a[k] = transform(cplx{gamma, k * pi / T});
        all_zero = all_zero && (a[k] == cplx{0.0, 0.0});
    }
    if (all_zero) return 0.0;

    const cplx z = std::exp(cplx{0.0, pi * t / T});
    const double front = std::exp(gamma * t) / T;
    auto fourier_fallback = [&]() {
        cplx s = a[0];
        cplx zk = 1.0;
        for (int k = 1; k <= n; ++k) {
            zk *= z;
            s += a[k] * zk;
        }
        return cplx{front * s.real(), 0.0};
    };

    // Quotient-difference table for the continued-fraction coefficients d.
    std::vector<std::vector<cplx>> q(static_cast<std::size_t>(n) + 1, std::vector<cplx>(static_cast<std::size_t>(M) + 1));
    std::vector<std::vector<cplx>> e(static_cast<std::size_t>(n) + 1, std::vector<cplx>(static_cast<std::size_t>(M) + 1));
    for (int i = 0; i <= n; ++i) e[i][0] = 0.0;
    for (int r = 1; r <= M; ++r) {
        if (r == 1) {
            for (int i = 0; i <= n - 1; ++i) {
                if (a[i] == cplx{0.0, 0.0})
                    throw convergence_error("invert_laplace_dehoog: QD breakdown (zero probe)", fourier_fallback(), n + 1);
                q[i][1] = a[i + 1] / a[i];
            }
        } else {
            for (int i = 0; i <= n - 2 * r + 1; ++i) {
                if (e[i][r - 1] == cplx{0.0, 0.0})
                    throw convergence_error("invert_laplace_dehoog: QD breakdown (zero e entry)", fourier_fallback(), n + 1);
                q[i][r] = q[i + 1][r - 1] * e[i + 1][r - 1] / e[i][r - 1];
            }
        }
        for (int i = 0; i <= n - 2 * r; ++i)
            e[i][r] = q[i + 1][r] - q[i][r] + e[i + 1][r - 1];
    }

    std::vector<cplx> d(static_cast<std::size_t>(n) + 1);
    d[0] = a[0];
    for (int r = 1; r <= M; ++r) {
        d[2 * r - 1] = -q[0][r];
        d[2 * r] = -e[0][r];
    }

    // Continued-fraction convergents A_k / B_k, then the remainder-improved
    // last term from the de Hoog paper.
    std::vector<cplx> A(static_cast<std::size_t>(n) + 3), B(static_cast<std::size_t>(n) + 3);
    A[0] = 0.0;
    B[0] = 1.0;
    A[1] = d[0];
    B[1] = 1.0;
    for (int k = 2; k <= n + 1; ++k) {
        A[k] = A[k - 1] + d[k - 1] * z * A[k - 2];
        B[k] = B[k - 1] + d[k - 1] * z * B[k - 2];
    }
    const cplx h = 0.5 * (1.0 + z * (d[n - 1] - d[n]));
    if (h == cplx{0.0, 0.0})
        throw convergence_error("invert_laplace_dehoog: degenerate remainder term", fourier_fallback(), n + 1);
    const cplx R = -h * (1.0 - std::sqrt(1.0 + z * d[n] / (h * h)));
    A[n + 2] = A[n + 1] + R * A[n];
    B[n + 2] = B[n + 1] + R * B[n];
    if (B[n + 2] == cplx{0.0, 0.0})
        throw convergence_error("invert_laplace_dehoog: vanishing denominator", fourier_fallback(), n + 1);
    return front * (A[n + 2] / B[n + 2]).real();
}

namespace detail {

inline std::vector<double> stehfest_weights(int N) {
    // Exact in long double: all factorials involved are <= 18! < 2^63.
    std::vector<long double> fact(static_cast<std::size_t>(N) + 1, 1.0L);
    for (int i = 1; i <= N; ++i) fact[i] = fact[i - 1] * i;
    const int half = N / 2;
    std::vector<double> v(static_cast<std::size_t>(N) + 1, 0.0);
    for (int k = 1; k <= N; ++k) {
        long double sum = 0.0L;
        for (int j = (k + 1) / 2; j <= std::min(k, half); ++j) {
            long double term = std::pow(static_cast<long double>(j), half) * fact[2 * j] /
                               (fact[half - j] * fact[j] * fact[j - 1] * fact[k - j] * fact[2 * j - k]);
            sum += term;
        }
        v[k] = static_cast<double>(((k + half) % 2 == 0 ? 1.0L : -1.0L) * sum);
    }
    return v;
}

}  // namespace detail

/// Gaver–Stehfest inversion with N (even, in [8, 18]) real probes.
/// Reliable only for smooth, non-oscillatory f; used as the cross-check.
template <class F>
double invert_laplace_stehfest(F&& transform, double t, int N = 14) {
    if (N < 8 || N > 18 || N % 2 != 0) throw domain_error("invert_laplace_stehfest: N must be even and in [8, 18]");
    if (!(t > 0.0) || !std::isfinite(t)) throw domain_error("invert_laplace_stehfest: t must be positive and finite");
    const std::vector<double> v = detail::stehfest_weights(N);
    const double ln2_t = std::log(2.0) / t;
    double sum = 0.0;
    for (int k = 1; k <= N; ++k) sum += v[k] * transform(k * ln2_t);
    return ln2_t * sum;
}

}  // namespace leakywell
