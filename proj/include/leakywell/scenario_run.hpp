#pragma once

// Scenario execution: expands a ScenarioConfig into curves (observation x
// sweep variant), evaluates every time point, and tags each value with its
// convergence flag.  Points are independent, so they are distributed over a
// small thread pool; each worker writes only its preassigned slot, which
// keeps the output byte-identical for any thread count.
//
// The optional cross check re-inverts every converged point with the
// Gaver-Stehfest route and records the worst relative discrepancy per curve.
// Agreement of two unrelated inversion schemes (complex contour vs. real-axis
// sampling) is strong evidence that the Laplace-domain field, not the
// inversion, dominates the error budget.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "leakywell/drawdown.hpp"
#include "leakywell/scenario.hpp"

namespace leakywell {

/// One evaluated time point of a drawdown curve.
struct CurvePoint {
    double t_s = 0.0;
    double s_D = 0.0;
    double s_mD = 0.0;  ///< observation-lag corrected value (= s_D when t_Bs = 0)
    std::string flag;   ///< "converged" | "accelerated-partial" | "failed"
    int panels = 0;     ///< worst Hankel panel count over the Laplace samples
    int terms = 0;      ///< worst vertical-series length over the Laplace samples
};

/// One curve: a single observation location under one sweep variant.
struct CurveResult {
    std::string scenario_id;
    std::string variant_key = "none";  ///< swept group name, "none" without a sweep
    double variant_value = 0.0;        ///< swept value, 0 without a sweep
    Observation obs;
    std::vector<CurvePoint> points;
    /// Worst relative de Hoog vs. Stehfest discrepancy over converged points;
    /// -1 when the cross check was not requested.
    double cross_check_max = -1.0;
};

/// Relative discrepancy with an absolute floor.  The type curves span
/// roughly [1e-3, 10] on log-log axes, so values below 1e-4 are off-chart;
/// there the real-probe Stehfest route is cancellation-limited (N=14
/// weights reach ~1e7, leaving ~1e-9 absolute noise) and a pure relative
/// comparison would only measure that noise.  Differences are therefore
/// taken against max(|a|, |b|, floor).
inline double rel_discrepancy(double a, double b, double floor_abs = 1e-4) {
    if (!std::isfinite(a) || !std::isfinite(b)) return std::numeric_limits<double>::infinity();
    const double scale = std::max({std::abs(a), std::abs(b), floor_abs});
    return std::abs(a - b) / scale;
}

/// Thread-count resolution: explicit request > LEAKYWELL_THREADS > hardware.
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("LEAKYWELL_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 512) return static_cast<int>(v);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

namespace detail {

inline const char* flag_of(const EvalDiagnostics& d) {
    if (d.failed) return "failed";
    if (d.accelerated_partial) return "accelerated-partial";
    return "converged";
}

}  // namespace detail

/// Evaluates every (observation x variant x time) point of the scenario.
/// `threads` <= 0 defers to resolve_threads; `cross_check` re-inverts
/// converged points with the Stehfest route.
inline std::vector<CurveResult> run_scenario(const ScenarioConfig& cfg, int threads = 0,
                                             bool cross_check = false) {
    cfg.validate();
    const std::vector<double> times = cfg.grid.times();

    struct Variant {
        std::string key;
        double value;
        DimensionlessGroups g;
    };
    std::vector<Variant> variants;
    if (cfg.sweep.key.empty()) {
        variants.push_back({"none", 0.0, cfg.groups});
    } else {
        variants.reserve(cfg.sweep.values.size());
        for (const double v : cfg.sweep.values)
            variants.push_back({cfg.sweep.key, v, apply_sweep(cfg.groups, cfg.sweep.key, v)});
    }

    std::vector<CurveResult> curves;
    curves.reserve(cfg.observations.size() * variants.size());
    for (const Observation& obs : cfg.observations) {
        for (const Variant& var : variants) {
            CurveResult c;
            c.scenario_id = cfg.id;
            c.variant_key = var.key;
            c.variant_value = var.value;
            c.obs = obs;
            c.points.resize(times.size());
            c.cross_check_max = cross_check ? 0.0 : -1.0;
            curves.push_back(std::move(c));
        }
    }

    const std::size_t n_curves = curves.size();
    const std::size_t n_times = times.size();
    const std::size_t n_jobs = n_curves * n_times;
    // curve index -> variant groups (observations repeat the variant cycle)
    std::vector<const Variant*> curve_variant(n_curves);
    for (std::size_t c = 0; c < n_curves; ++c) curve_variant[c] = &variants[c % variants.size()];

    // per-point cross-check discrepancies, reduced per curve after the joins
    std::vector<double> cross(cross_check ? n_jobs : 0, -1.0);

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t job = next.fetch_add(1); job < n_jobs; job = next.fetch_add(1)) {
            const std::size_t c = job / n_times;
            const std::size_t i = job % n_times;
            CurveResult& curve = curves[c];
            const DimensionlessGroups& g = curve_variant[c]->g;
            CurvePoint& pt = curve.points[i];
            pt.t_s = times[i];
            try {
                const TimeSample ts = drawdown_dimensionless(g, curve.obs.r_D, curve.obs.z_lo,
                                                             curve.obs.z_hi, pt.t_s, cfg.numerics,
                                                             InversionRoute::dehoog);
                pt.s_D = ts.s_D;
                pt.s_mD = curve.obs.t_Bs > 0.0 ? delayed_drawdown(ts.s_D, pt.t_s, curve.obs.t_Bs)
                                               : ts.s_D;
                pt.flag = detail::flag_of(ts.diag);
                pt.panels = ts.diag.max_panels;
                pt.terms = ts.diag.max_series_terms;
                if (cross_check && !ts.diag.failed && !ts.diag.accelerated_partial) {
                    const TimeSample alt =
                        drawdown_dimensionless(g, curve.obs.r_D, curve.obs.z_lo, curve.obs.z_hi,
                                               pt.t_s, cfg.numerics, InversionRoute::stehfest);
                    cross[job] = rel_discrepancy(ts.s_D, alt.s_D);
                }
            } catch (const std::exception&) {
                pt.s_D = std::numeric_limits<double>::quiet_NaN();
                pt.s_mD = pt.s_D;
                pt.flag = "failed";
            }
        }
    };

    const int n_threads = std::min<int>(resolve_threads(threads), static_cast<int>(std::max<std::size_t>(n_jobs, 1)));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    if (cross_check) {
        for (std::size_t c = 0; c < n_curves; ++c)
            for (std::size_t i = 0; i < n_times; ++i)
                if (cross[c * n_times + i] >= 0.0)
                    curves[c].cross_check_max = std::max(curves[c].cross_check_max, cross[c * n_times + i]);
    }
    return curves;
}

}  // namespace leakywell
