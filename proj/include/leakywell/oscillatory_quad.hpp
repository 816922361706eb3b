// leakywell: semi-analytic drawdown solver for leaky unconfined aquifers
// SPDX-License-Identifier: MIT
//
// Semi-infinite oscillatory integrals with a J0 kernel:
//
//     integrate_oscillatory(g, c) = ∫_0^∞ g(y) J0(c y) dy .
//
// Kernel convention (fixed, single): the engine supplies exactly the factor
// J0(c y); everything else — including any power-of-y weight from a Hankel
// transform — lives inside the caller's g.
//
// The axis is partitioned at the scaled J0 zeros {j_k / c}, so consecutive
// panel contributions alternate in sign once g is slowly varying; each panel
// uses a fixed-order Gauss–Legendre rule, and the alternating partial sums
// are extrapolated by the epsilon algorithm (integration-then-summation as
// in Longman's method).  A plainly settled tail (two consecutive negligible
// panels) short-circuits the extrapolation.
//
// Inner resolution: transform-domain integrands develop structure near y = 0
// on the scale of the smallest modified wavenumber (~ sqrt|beta| / c), which
// at late times is orders of magnitude narrower than the first J0 half-wave.
// A fixed-order rule on the whole first panel cannot see such a feature, so
// callers pass that scale as `inner_scale` and the first panel is subdivided
// geometrically (octave by octave) until the innermost sub-panel is no wider
// than the feature.  Every intermediate scale is then resolved by the
// sub-panel of matching width.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "leakywell/bessel_j.hpp"
#include "leakywell/core.hpp"
#include "leakywell/gauss_legendre.hpp"
#include "leakywell/sequence_acceleration.hpp"

namespace leakywell {

struct OscillatoryQuadConfig {
    int panels_before_extrapolation = 12;
    int max_panels = 64;
    int panel_rule = 16;  ///< Gauss–Legendre nodes per panel
    double tail_rel_tol = 1e-9;

    void validate() const {
        if (panels_before_extrapolation < 4)
            throw domain_error("OscillatoryQuadConfig: panels_before_extrapolation must be >= 4");
        if (max_panels < panels_before_extrapolation)
            throw domain_error("OscillatoryQuadConfig: max_panels must be >= panels_before_extrapolation");
        if (panel_rule < 8) throw domain_error("OscillatoryQuadConfig: panel_rule (node count) must be >= 8");
        if (!(tail_rel_tol > 0.0) || tail_rel_tol > 1e-2)
            throw domain_error("OscillatoryQuadConfig: tail_rel_tol must be in (0, 1e-2]");
    }
};

struct QuadOutcome {
    cplx value{0.0, 0.0};
    int panels_used = 0;
    bool accelerated = false;  ///< true when the epsilon extrapolant supplied the value
};

/// Evaluate ∫_0^∞ g(y) J0(c y) dy for smooth g decaying at least
/// algebraically.  `inner_scale` > 0 is the width of the finest structure g
/// carries near y = 0; the first panel is subdivided geometrically down to
/// it.  Throws convergence_error carrying the last estimate and the panel
/// count if max_panels is exhausted.
template <class G>
QuadOutcome integrate_oscillatory(G&& g, double oscillation_scale,
                                  const OscillatoryQuadConfig& cfg = OscillatoryQuadConfig{},
                                  double inner_scale = 0.0) {
    cfg.validate();
    const double c = oscillation_scale;
    if (!(c > 0.0) || !std::isfinite(c)) throw domain_error("integrate_oscillatory: oscillation scale must be positive and finite");
    if (inner_scale < 0.0 || !std::isfinite(inner_scale))
        throw domain_error("integrate_oscillatory: inner_scale must be >= 0 and finite");

    const GaussLegendreRule& rule = gauss_legendre_rule(cfg.panel_rule);
    auto eval_panel = [&](double a, double b) -> cplx {
        const double mid = 0.5 * (a + b);
        const double hw = 0.5 * (b - a);
        cplx acc{0.0, 0.0};
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double y = mid + hw * rule.nodes[i];
            acc += rule.weights[i] * g(y) * bessel_j0(c * y);
        }
        return hw * acc;
    };

    std::vector<cplx> partial;
    partial.reserve(static_cast<std::size_t>(cfg.max_panels));

    cplx sum{0.0, 0.0};
    int tiny_streak = 0;
    cplx prev_accel{0.0, 0.0};
    bool have_accel = false;

    double y_lo = 0.0;
    for (int k = 1; k <= cfg.max_panels; ++k) {
        const double y_hi = j0_zeros(k) / c;
        cplx panel{0.0, 0.0};
        if (k == 1 && inner_scale > 0.0 && inner_scale < y_hi) {
            // Octave ladder over [0, y_hi]: innermost sub-panel no wider
            // than the feature, each coarser octave resolved at its own size.
            const int depth = std::min(64, static_cast<int>(std::ceil(std::log2(y_hi / inner_scale))));
            double b = y_hi * std::ldexp(1.0, -depth);
            panel = eval_panel(0.0, b);
            for (int j = depth - 1; j >= 0; --j) {
                const double b_next = y_hi * std::ldexp(1.0, -j);
                panel += eval_panel(b, b_next);
                b = b_next;
            }
        } else {
            panel = eval_panel(y_lo, y_hi);
        }
        sum += panel;
        partial.push_back(sum);
        y_lo = y_hi;

        // Plain settling: two consecutive panels below the tail tolerance
        // (absolute-or-relative) mean extrapolation is unnecessary.
        if (std::abs(panel) <= cfg.tail_rel_tol * std::abs(sum)) {
            if (++tiny_streak >= 2) return {sum, k, false};
        } else {
            tiny_streak = 0;
        }

        if (k >= cfg.panels_before_extrapolation) {
            // Extrapolate a trailing window: early panels are far from the
            // asymptotic alternating regime and only add noise to the table.
            const std::size_t window = std::min<std::size_t>(partial.size(), 41);
            const std::vector<cplx> tail(partial.end() - static_cast<std::ptrdiff_t>(window), partial.end());
            const AcceleratedValue acc = accelerate_sequence(tail);
            if (!acc.used_fallback && have_accel) {
                const double delta = std::abs(acc.value - prev_accel);
                if (delta <= cfg.tail_rel_tol * std::abs(acc.value) ||
                    (std::abs(acc.value) < 1e-300 && delta < 1e-300))
                    return {acc.value, k, true};
            }
            if (!acc.used_fallback) {
                prev_accel = acc.value;
                have_accel = true;
            }
        }
    }
    throw convergence_error("integrate_oscillatory: tail not converged within max_panels",
                            have_accel ? prev_accel : sum, cfg.max_panels);
}

}  // namespace leakywell
