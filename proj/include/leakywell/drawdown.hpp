// leakywell: semi-analytic drawdown solver for leaky unconfined aquifers
// SPDX-License-Identifier: MIT
//
// Field assembly and time-domain evaluation.  All fields are dimensionless:
// s_D = (4 pi K_r b / Q) s as a function of (r_D, z_D, t_s).  The vertical
// coordinate spans three media,
//     z_D in [-R_b, 0]     aquitard      (s1),
//     z_D in [0, 1]        aquifer       (s = s_C + s_U),
//     z_D in [1, 1 + L_D]  vadose zone   (sigma),
// and every Laplace-domain companion field is an order-0 inverse Hankel
// integral over the scaled radius (kernel y J0(y K_D^{1/2} r_D) dy) of the
// coupled boundary data:
//     sbar_U    = H^{-1}[ su_hat(z_D) ],
//     sbar_1    = H^{-1}[ (S0 + su_hat(0)) cosh(mu1 (z_D + R_b))/cosh(mu1 R_b) ],
//     sigma_bar = H^{-1}[ (S1 + su_hat(1)) P(z_D) ],
// with S0, S1 the source-term boundary values and P the vadose profile.
//
// Time-domain values invert the beta-transform at t_s with the de Hoog
// algorithm (Gaver-Stehfest available as an independent cross-check route).
// Interval-averaged drawdown applies a fixed 16-node Gauss-Legendre rule in
// z per medium segment, sharing all per-y series/coupling work inside a
// single Hankel integral.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "leakywell/aquitard.hpp"
#include "leakywell/confined_flow.hpp"
#include "leakywell/coupling.hpp"
#include "leakywell/core.hpp"
#include "leakywell/gauss_legendre.hpp"
#include "leakywell/laplace_inversion.hpp"
#include "leakywell/model_types.hpp"
#include "leakywell/oscillatory_quad.hpp"
#include "leakywell/vadose_zone.hpp"

namespace leakywell {

/// One bundle for every tunable of the evaluation pipeline.
struct Numerics {
    LaplaceConfig laplace{};
    OscillatoryQuadConfig quad{};
    SeriesControls series{};
    int stehfest_N = 14;
    CouplingMode coupling = CouplingMode::automatic;

    void validate() const {
        laplace.validate();
        quad.validate();
        series.validate();
        if (stehfest_N < 8 || stehfest_N > 18 || stehfest_N % 2 != 0)
            throw domain_error("Numerics: stehfest_N must be even and in [8, 18]");
    }
};

/// What it took to produce a value (worst case across Laplace probes).
struct EvalDiagnostics {
    int max_series_terms = 0;
    int max_panels = 0;
    bool accelerated_partial = false;  ///< some cap forced acceptance of an extrapolated/partial value
    bool failed = false;               ///< no usable value was produced
    std::string failure_context;

    void merge(const EvalDiagnostics& o) {
        max_series_terms = std::max(max_series_terms, o.max_series_terms);
        max_panels = std::max(max_panels, o.max_panels);
        accelerated_partial = accelerated_partial || o.accelerated_partial;
        failed = failed || o.failed;
        if (failure_context.empty()) failure_context = o.failure_context;
    }

    void note(const std::string& ctx) {
        if (failure_context.empty()) failure_context = ctx;
    }
};

/// A Laplace-domain field value plus the effort/quality bookkeeping.
struct FieldSample {
    cplx value{0.0, 0.0};
    int panels = 0;
    int series_terms = 0;
    bool partial = false;  ///< a convergence cap forced partial acceptance
    std::string note;
};

namespace detail {

/// Width of the finest y-structure the transform-domain kernels carry near
/// the origin: the aquifer modified wavenumber |m_0| = sqrt(|beta| / K_D) /
/// r_D, shrunk further when the aquitard response turns over below it
/// (its wavenumber crosses scale at y ~ m_0 sqrt(R_Ss / R_Kr)).
inline double hankel_inner_scale(const DimensionlessGroups& g, cplx beta, double r_D) {
    double scale = std::sqrt(std::abs(beta) / g.K_D) / r_D;
    if (g.R_Kz > 0.0 && g.R_Kr > 0.0)
        scale *= std::clamp(std::sqrt(g.R_Ss / g.R_Kr), 1.0 / 32.0, 1.0);
    return scale;
}

/// Shared per-(groups, r_D, beta) state for one Hankel integral: the source
/// series tables grow lazily and the coupling is assembled once per y.
class FieldKernel {
public:
    FieldKernel(const DimensionlessGroups& g, double r_D, cplx beta, const Numerics& num)
        : g_(g), num_(num), r_D_(r_D), beta_(beta), series_(g, r_D, beta, num.series) {}

    struct YState {
        cplx S0, S1;
        TransformPoint tp;
    };

    YState at(double y) {
        const auto [S0, S1] = series_.shat01(y);
        return {S0, S1, coupling_rho(g_, beta_, y, r_D_, S0, S1, num_.coupling)};
    }

    ConfinedSeries& series() { return series_; }
    [[nodiscard]] double hankel_scale() const { return std::sqrt(g_.K_D) * r_D_; }
    [[nodiscard]] double inner_scale() const { return hankel_inner_scale(g_, beta_, r_D_); }
    [[nodiscard]] const DimensionlessGroups& groups() const { return g_; }
    [[nodiscard]] cplx beta() const { return beta_; }
    [[nodiscard]] double r_D() const { return r_D_; }

private:
    const DimensionlessGroups& g_;
    const Numerics& num_;
    double r_D_;
    cplx beta_;
    ConfinedSeries series_;
};

/// Run one oscillatory integral, folding cap exhaustion into the sample.
template <class G>
void run_quad(G&& kernel, double c, double inner, const OscillatoryQuadConfig& cfg, FieldSample& out) {
    try {
        const QuadOutcome q = integrate_oscillatory(std::forward<G>(kernel), c, cfg, inner);
        out.value += q.value;
        out.panels = std::max(out.panels, q.panels_used);
    } catch (const convergence_error& e) {
        out.value += e.partial_result;
        out.panels = std::max(out.panels, e.steps_used);
        out.partial = true;
        if (out.note.empty()) out.note = e.what();
    }
}

}  // namespace detail

/// Water-table correction field in the aquifer, z_D in [0, 1].
inline cplx sbar_U(double r_D, double z_D, cplx beta, const DimensionlessGroups& g,
                   const Numerics& num = Numerics{}) {
    if (z_D < 0.0 || z_D > 1.0) throw domain_error("sbar_U: z_D must lie in [0, 1]");
    detail::FieldKernel k(g, r_D, beta, num);
    auto G = [&](double y) -> cplx { return y * su_hat(k.at(y).tp, z_D); };
    return integrate_oscillatory(G, k.hankel_scale(), num.quad, k.inner_scale()).value;
}

/// Aquitard field, z_D in [-R_b, 0]; identically zero for a sealed base.
inline cplx sbar_1(double r_D, double z_D, cplx beta, const DimensionlessGroups& g,
                   const Numerics& num = Numerics{}) {
    if (z_D > 0.0) throw domain_error("sbar_1: z_D must be <= 0");
    if (!is_infinite_extent(g.R_b) && z_D < -g.R_b) throw domain_error("sbar_1: z_D below the aquitard base");
    if (g.R_Kz == 0.0) return cplx{0.0, 0.0};  // sealed base: nothing penetrates
    detail::FieldKernel k(g, r_D, beta, num);
    auto G = [&](double y) -> cplx {
        const auto st = k.at(y);
        return y * (st.S0 + su_hat(st.tp, 0.0)) * aquitard_ratio(g, beta, y, r_D, z_D);
    };
    return integrate_oscillatory(G, k.hankel_scale(), num.quad, k.inner_scale()).value;
}

/// Vadose field, z_D in [1, 1 + L_D].
inline cplx sigma_bar(double r_D, double z_D, cplx beta, const DimensionlessGroups& g,
                      const Numerics& num = Numerics{}) {
    if (z_D < 1.0) throw domain_error("sigma_bar: z_D must be >= 1");
    if (!is_infinite_extent(g.L_D) && z_D > 1.0 + g.L_D)
        throw domain_error("sigma_bar: z_D exceeds the land surface");
    detail::FieldKernel k(g, r_D, beta, num);
    auto G = [&](double y) -> cplx {
        const auto st = k.at(y);
        return y * (st.S1 + su_hat(st.tp, 1.0)) * vadose_profile(g, beta, y, r_D, z_D);
    };
    return integrate_oscillatory(G, k.hankel_scale(), num.quad, k.inner_scale()).value;
}

/// Laplace-domain point field with media dispatch and diagnostics.
inline FieldSample laplace_field(const DimensionlessGroups& g, double r_D, double z_D, cplx beta,
                                 const Numerics& num = Numerics{}) {
    FieldSample out;
    if (z_D < 0.0) {
        if (!is_infinite_extent(g.R_b) && z_D < -g.R_b)
            throw domain_error("laplace_field: z_D below the aquitard base");
        if (g.R_Kz == 0.0) return out;  // sealed base
        detail::FieldKernel k(g, r_D, beta, num);
        auto G = [&](double y) -> cplx {
            const auto st = k.at(y);
            return y * (st.S0 + su_hat(st.tp, 0.0)) * aquitard_ratio(g, beta, y, r_D, z_D);
        };
        detail::run_quad(G, k.hankel_scale(), k.inner_scale(), num.quad, out);
        out.series_terms = k.series().max_terms_used();
        return out;
    }
    if (z_D <= 1.0) {
        detail::FieldKernel k(g, r_D, beta, num);
        try {
            out.value = k.series().sbar_C(z_D);
        } catch (const convergence_error& e) {
            out.value = e.partial_result;
            out.partial = true;
            out.note = e.what();
        }
        if (k.series().cap_accelerated()) {
            out.partial = true;
            if (out.note.empty()) out.note = "sbar_C: series cap reached; epsilon-extrapolated tail accepted";
        }
        auto G = [&](double y) -> cplx { return y * su_hat(k.at(y).tp, z_D); };
        detail::run_quad(G, k.hankel_scale(), k.inner_scale(), num.quad, out);
        out.series_terms = k.series().max_terms_used();
        return out;
    }
    if (!is_infinite_extent(g.L_D) && z_D > 1.0 + g.L_D)
        throw domain_error("laplace_field: z_D exceeds the land surface");
    detail::FieldKernel k(g, r_D, beta, num);
    auto G = [&](double y) -> cplx {
        const auto st = k.at(y);
        return y * (st.S1 + su_hat(st.tp, 1.0)) * vadose_profile(g, beta, y, r_D, z_D);
    };
    detail::run_quad(G, k.hankel_scale(), k.inner_scale(), num.quad, out);
    out.series_terms = k.series().max_terms_used();
    return out;
}

/// Laplace-domain field averaged over z_D in [z_lo, z_hi], split at media
/// interfaces, 16-node Gauss-Legendre per segment, thickness-weighted.
inline FieldSample laplace_field_avg(const DimensionlessGroups& g, double r_D, double z_lo, double z_hi,
                                     cplx beta, const Numerics& num = Numerics{}) {
    if (!(z_lo < z_hi)) throw domain_error("laplace_field_avg: need z_lo < z_hi");
    const double base = is_infinite_extent(g.R_b) ? -std::numeric_limits<double>::infinity() : -g.R_b;
    const double top = is_infinite_extent(g.L_D) ? std::numeric_limits<double>::infinity() : 1.0 + g.L_D;
    if (z_lo < base || z_hi > top) throw domain_error("laplace_field_avg: interval leaves the flow domain");

    struct Node {
        double z;
        double w;    // absolute weight
        int medium;  // 0 aquitard, 1 aquifer, 2 vadose
    };
    std::vector<Node> nodes;
    const GaussLegendreRule& rule = gauss_legendre_rule(16);
    auto add_segment = [&](double a, double b, int medium) {
        const double lo = std::max(z_lo, a);
        const double hi = std::min(z_hi, b);
        if (!(hi > lo)) return;
        const double hw = 0.5 * (hi - lo);
        const double mid = 0.5 * (hi + lo);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            nodes.push_back({mid + hw * rule.nodes[i], hw * rule.weights[i], medium});
    };
    add_segment(base, 0.0, 0);
    add_segment(0.0, 1.0, 1);
    add_segment(1.0, top, 2);

    FieldSample out;
    detail::FieldKernel k(g, r_D, beta, num);

    // source part (aquifer nodes only; it has no transform-domain companion)
    for (const Node& n : nodes) {
        if (n.medium != 1) continue;
        try {
            out.value += n.w * k.series().sbar_C(n.z);
        } catch (const convergence_error& e) {
            out.value += n.w * e.partial_result;
            out.partial = true;
            if (out.note.empty()) out.note = e.what();
        }
    }
    if (k.series().cap_accelerated()) {
        out.partial = true;
        if (out.note.empty()) out.note = "sbar_C: series cap reached; epsilon-extrapolated tail accepted";
    }

    const bool sealed = (g.R_Kz == 0.0);
    auto G = [&](double y) -> cplx {
        const auto st = k.at(y);
        cplx acc{0.0, 0.0};
        cplx top_val{0.0, 0.0}, iface_val{0.0, 0.0};
        bool have_top = false, have_iface = false;
        for (const Node& n : nodes) {
            switch (n.medium) {
                case 1:
                    acc += n.w * su_hat(st.tp, n.z);
                    break;
                case 2:
                    if (!have_top) {
                        top_val = st.S1 + su_hat(st.tp, 1.0);
                        have_top = true;
                    }
                    acc += n.w * top_val * vadose_profile(g, beta, y, r_D, n.z);
                    break;
                default:
                    if (sealed) break;
                    if (!have_iface) {
                        iface_val = st.S0 + su_hat(st.tp, 0.0);
                        have_iface = true;
                    }
                    acc += n.w * iface_val * aquitard_ratio(g, beta, y, r_D, n.z);
                    break;
            }
        }
        return y * acc;
    };
    detail::run_quad(G, k.hankel_scale(), k.inner_scale(), num.quad, out);
    out.series_terms = k.series().max_terms_used();
    out.value /= (z_hi - z_lo);
    return out;
}

enum class InversionRoute { dehoog, stehfest };

/// Dimensionless time-domain drawdown; z_lo = z_hi gives the point field.
struct TimeSample {
    double s_D = 0.0;
    EvalDiagnostics diag;
};

inline TimeSample drawdown_dimensionless(const DimensionlessGroups& g, double r_D, double z_lo, double z_hi,
                                         double t_s, const Numerics& num = Numerics{},
                                         InversionRoute route = InversionRoute::dehoog) {
    g.validate();
    num.validate();
    TimeSample out;
    auto F = [&](cplx beta) -> cplx {
        const FieldSample fs = (z_lo == z_hi) ? laplace_field(g, r_D, z_lo, beta, num)
                                              : laplace_field_avg(g, r_D, z_lo, z_hi, beta, num);
        out.diag.max_series_terms = std::max(out.diag.max_series_terms, fs.series_terms);
        out.diag.max_panels = std::max(out.diag.max_panels, fs.panels);
        if (fs.partial) {
            out.diag.accelerated_partial = true;
            out.diag.note(fs.note);
        }
        return fs.value;
    };
    auto F_real = [&](double beta) -> double { return F(cplx{beta, 0.0}).real(); };
    try {
        out.s_D = route == InversionRoute::dehoog ? invert_laplace_dehoog(F, t_s, num.laplace)
                                                  : invert_laplace_stehfest(F_real, t_s, num.stehfest_N);
    } catch (const convergence_error& e) {
        out.s_D = e.partial_result.real();
        out.diag.accelerated_partial = true;
        out.diag.note(e.what());
    }
    if (!std::isfinite(out.s_D)) {
        out.diag.failed = true;
        out.diag.note("time-domain value is not finite");
    }
    return out;
}

/// Dimensional time-domain point drawdown with diagnostics.
struct DrawdownResult {
    double s = 0.0;    ///< dimensional drawdown
    double s_D = 0.0;  ///< (4 pi K_r b / Q) s
    EvalDiagnostics diag;
};

inline DrawdownResult drawdown(const PhysicalSystem& sys, double r, double z, double t,
                               const Numerics& num = Numerics{}) {
    const Dimensionalization dim = to_dimensionless(sys, r, t);
    const double z_D = z / sys.aquifer.b;
    const TimeSample ts = drawdown_dimensionless(dim.groups, dim.r_D, z_D, z_D, dim.t_s, num);
    return {drawdown_scale(sys) * ts.s_D, ts.s_D, ts.diag};
}

/// Dimensional drawdown averaged over the vertical interval [z1, z2]
/// (observation screen); degenerate z1 = z2 returns the point value.
inline DrawdownResult averaged_drawdown(const PhysicalSystem& sys, double r, double z1, double z2,
                                        double t, const Numerics& num = Numerics{}) {
    const Dimensionalization dim = to_dimensionless(sys, r, t);
    const double lo = std::min(z1, z2) / sys.aquifer.b;
    const double hi = std::max(z1, z2) / sys.aquifer.b;
    const TimeSample ts = drawdown_dimensionless(dim.groups, dim.r_D, lo, hi, dim.t_s, num);
    return {drawdown_scale(sys) * ts.s_D, ts.s_D, ts.diag};
}

/// First-order observation-lag correction: the measured value follows the
/// formation value with time constant t_B (t_B = 0 means no lag).
inline double delayed_drawdown(double s, double t, double t_B) {
    if (t_B < 0.0 || !std::isfinite(t_B)) throw domain_error("delayed_drawdown: t_B must be >= 0 and finite");
    if (!(t > 0.0)) throw domain_error("delayed_drawdown: t must be positive");
    if (t_B == 0.0) return s;
    return s * (1.0 - std::exp(-t / t_B));
}

}  // namespace leakywell
