// leakywell: semi-analytic drawdown solver for leaky unconfined aquifers
// SPDX-License-Identifier: MIT
//
// Laplace-domain flow to a partially penetrating, finite-radius well with
// wellbore storage in a confined aquifer (the "source" part of the
// decomposed solution), plus its radial Hankel companion.
//
// With beta the Laplace variable conjugate to t_s and
//   m_n^2 = beta / (K_D r_D^2) + (n pi)^2,
//   phi_n = K_D^{1/2} r_D  m_n   (observation radius argument),
//   w_n   = K_D^{1/2} r_wb m_n   (well-face argument, = r_wD phi_n),
//   Omega(n) = w_n K1(w_n) + [C_wD / (2 (l_D - d_D))] w_n^2 K0(w_n),
//   omega_0 = 2 / Omega(0),
//   omega_n = [sin(n pi l_D) - sin(n pi d_D)] / [n pi (l_D - d_D) Omega(n)],
// the point value is
//   sbar_C = (1/beta) [ omega_0 K0(phi_0)
//                       + sum_n omega_n K0(phi_n) cos(n pi (1 - z_D)) ] .
//
// ddbar_sC is the order-0 Hankel transform of sbar_C over the scaled radius
// K_D^{1/2} r_D (conjugate variable y), with the field inside the well face
// extended by its face value; writing x_w = y K_D^{1/2} r_wb, each series
// term couples through
//   ghat_n = (c_w / y) J1(x_w) K0(w_n)
//          + [w_n J0(x_w) K1(w_n) - x_w J1(x_w) K0(w_n)] / (y^2 + m_n^2),
//   c_w = K_D^{1/2} r_wb .
// The n-series of ghat decays only algebraically (~1/n^3), so it is summed
// directly past the m_n ~ y turnover and epsilon-accelerated on the
// oscillatory tail; at z_D = 0 and 1 the cosine factor degenerates to
// (-1)^n and 1 and both values are accumulated in one pass.
//
// Typo note: the bracketed wellbore term of Omega(n) is sometimes printed
// with the n = 0 argument inside K1 for all n; every term here uses w_n,
// the only reading under which Omega depends on n and the r_w -> 0 limit
// behaves (x K1(x) -> 1).

#pragma once

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "leakywell/bessel_ik.hpp"
#include "leakywell/bessel_j.hpp"
#include "leakywell/core.hpp"
#include "leakywell/model_types.hpp"
#include "leakywell/scaled_value.hpp"
#include "leakywell/sequence_acceleration.hpp"

namespace leakywell {

/// Per-(groups, r_D, beta) evaluator with lazily grown n-tables shared by
/// the point series and the Hankel-domain series.  Not thread-safe; intended
/// to be owned by one (time point x Laplace probe) evaluation.
class ConfinedSeries {
public:
    ConfinedSeries(const DimensionlessGroups& g, double r_D, cplx beta, SeriesControls ctl = SeriesControls{})
        : g_(g), ctl_(ctl), r_D_(r_D), beta_(beta) {
        g_.validate();
        ctl_.validate();
        if (!(r_D > 0) || !std::isfinite(r_D)) throw domain_error("ConfinedSeries: r_D must be positive and finite");
        if (!(beta.real() > 0)) throw domain_error("ConfinedSeries: Re beta must be positive");
        c_ = std::sqrt(g_.K_D) * r_D_;
        c_w_ = std::sqrt(g_.K_D) * g_.r_wb;
        base_ = beta_ / (g_.K_D * r_D_ * r_D_);
        inv_two_delta_ = g_.C_wD / (2.0 * (g_.l_D - g_.d_D));
        rows_.reserve(64);
    }

    /// Laplace-domain confined-part drawdown at height z_D in [0, 1].
    cplx sbar_C(double z_D) {
        if (z_D < 0.0 || z_D > 1.0) throw domain_error("sbar_C: z_D must lie in [0, 1]");
        cplx tot = row(0).sc;
        int settled = 0;
        std::vector<cplx> tail;
        const int cap = ctl_.max_cosine_terms;
        for (int n = 1; n <= cap; ++n) {
            const cplx term = row(n).sc * std::cos(n * pi * (1.0 - z_D));
            tot += term;
            if (std::abs(term) <= ctl_.series_rel_tol * std::abs(tot)) {
                if (++settled >= 3) return tot / beta_;
            } else {
                settled = 0;
            }
            if (n > cap - 33) tail.push_back(tot);
        }
        // Cap reached: extrapolate the algebraic tail before giving up.
        const AcceleratedValue acc = accelerate_sequence(tail);
        if (acc.used_fallback)
            throw convergence_error("sbar_C: cosine series not converged at max_cosine_terms", tot / beta_, cap);
        cap_accelerated_ = true;
        return acc.value / beta_;
    }

    /// Hankel companion of sbar_C at z_D = 0 and z_D = 1, one pass.
    std::pair<cplx, cplx> shat01(double y) {
        double j0xw, j1xw_over_y;
        const cplx g0 = ghat_parts(y, 0, j0xw, j1xw_over_y);
        cplx s1 = g0;
        cplx s0 = g0;
        const int nd = n_direct(y);
        for (int n = 1; n <= nd; ++n) {
            const cplx t = ghat(n, y, j0xw, j1xw_over_y);
            s1 += t;
            s0 += (n % 2 == 0) ? t : -t;
        }
        std::vector<cplx> p0{s0}, p1{s1};
        for (int n = nd + 1; n <= nd + 32; ++n) {
            const cplx t = ghat(n, y, j0xw, j1xw_over_y);
            s1 += t;
            s0 += (n % 2 == 0) ? t : -t;
            p0.push_back(s0);
            p1.push_back(s1);
        }
        return {accelerate_sequence(p0).value / beta_, accelerate_sequence(p1).value / beta_};
    }

    /// Hankel companion at general z_D in [0, 1] (0/1 fast path above).
    cplx shat(double y, double z_D) {
        if (z_D < 0.0 || z_D > 1.0) throw domain_error("shat: z_D must lie in [0, 1]");
        double j0xw, j1xw_over_y;
        cplx s = ghat_parts(y, 0, j0xw, j1xw_over_y);
        const int nd = n_direct(y);
        for (int n = 1; n <= nd; ++n) s += ghat(n, y, j0xw, j1xw_over_y) * std::cos(n * pi * (1.0 - z_D));
        std::vector<cplx> ps{s};
        for (int n = nd + 1; n <= nd + 32; ++n) {
            s += ghat(n, y, j0xw, j1xw_over_y) * std::cos(n * pi * (1.0 - z_D));
            ps.push_back(s);
        }
        return accelerate_sequence(ps).value / beta_;
    }

    [[nodiscard]] cplx beta() const { return beta_; }
    [[nodiscard]] double r_D() const { return r_D_; }
    [[nodiscard]] const DimensionlessGroups& groups() const { return g_; }
    /// deepest cosine-series index materialized so far
    [[nodiscard]] int max_terms_used() const { return static_cast<int>(rows_.size()) - 1; }
    /// true when a series cap forced epsilon extrapolation in sbar_C
    [[nodiscard]] bool cap_accelerated() const { return cap_accelerated_; }

private:
    struct Row {
        cplx m2;  ///< m_n^2
        cplx a;   ///< omega_n K0(w_n)
        cplx b;   ///< omega_n w_n K1(w_n)
        cplx sc;  ///< omega_n K0(phi_n)
    };

    [[nodiscard]] int n_direct(double y) const {
        const int turnover = static_cast<int>(2.5 * y / pi) + 48;
        const int cap = ctl_.max_cosine_terms - 48;
        return std::max(0, std::min(cap, turnover));
    }

    const Row& row(int n) {
        while (static_cast<int>(rows_.size()) <= n) {
            const int k = static_cast<int>(rows_.size());
            const cplx m2 = base_ + cplx{k * pi * k * pi, 0.0};
            const cplx m = std::sqrt(m2);
            const cplx w = c_w_ * m;
            const cplx phi = c_ * m;
            auto [k0w, k1w] = bessel_k01_scaled(w);
            const scaled_complex omega_den = k1w * w + k0w * (inv_two_delta_ * w * w);
            if (omega_den.is_zero()) throw singularity_error("ConfinedSeries: Omega(n) vanished");
            double coef;
            if (k == 0) {
                coef = 2.0;
            } else {
                coef = (std::sin(k * pi * g_.l_D) - std::sin(k * pi * g_.d_D)) / (k * pi * (g_.l_D - g_.d_D));
            }
            const scaled_complex omega = scaled_complex::from(coef) / omega_den;
            const scaled_complex k0phi = bessel_k01_scaled(phi).first;
            rows_.push_back(Row{m2, (omega * k0w).to_complex(), (omega * (k1w * w)).to_complex(),
                                (omega * k0phi).to_complex()});
        }
        return rows_[static_cast<std::size_t>(n)];
    }

    /// ghat_0 plus the y-dependent J factors reused by every n.
    cplx ghat_parts(double y, int n0, double& j0xw, double& j1xw_over_y) {
        if (!(y >= 0.0) || !std::isfinite(y)) throw domain_error("ddbar_sC: y must be >= 0 and finite");
        if (y == 0.0) {
            j0xw = 1.0;
            j1xw_over_y = 0.5 * c_w_;  // J1(x)/x -> 1/2
        } else {
            const double xw = y * c_w_;
            j0xw = bessel_j0(xw);
            j1xw_over_y = bessel_j1(xw) / y;
        }
        return ghat(n0, y, j0xw, j1xw_over_y);
    }

    cplx ghat(int n, double y, double j0xw, double j1xw_over_y) {
        const Row& r = row(n);
        const cplx first = (c_w_ * j1xw_over_y) * r.a;
        const cplx second = (r.b * j0xw - (y * y * j1xw_over_y * c_w_) * r.a) / (y * y + r.m2);
        return first + second;
    }

    DimensionlessGroups g_;
    SeriesControls ctl_;
    double r_D_;
    cplx beta_;
    double c_ = 0.0;    ///< K_D^{1/2} r_D
    double c_w_ = 0.0;  ///< K_D^{1/2} r_wb
    cplx base_;         ///< beta / (K_D r_D^2)
    double inv_two_delta_ = 0.0;  ///< C_wD / (2 (l_D - d_D))
    std::vector<Row> rows_;
    bool cap_accelerated_ = false;
};

/// Point value of the confined-part solution (free-function form).
inline cplx sbar_C(double r_D, double z_D, cplx beta, const DimensionlessGroups& g,
                   const SeriesControls& ctl = SeriesControls{}) {
    ConfinedSeries series(g, r_D, beta, ctl);
    return series.sbar_C(z_D);
}

/// Laplace-Hankel companion of sbar_C (free-function form).
inline cplx ddbar_sC(double y, double z_D, cplx beta, const DimensionlessGroups& g, double r_D,
                     const SeriesControls& ctl = SeriesControls{}) {
    ConfinedSeries series(g, r_D, beta, ctl);
    if (z_D == 0.0) return series.shat01(y).first;
    if (z_D == 1.0) return series.shat01(y).second;
    return series.shat(y, z_D);
}

}  // namespace leakywell
