// leakywell: semi-analytic drawdown solver for leaky unconfined aquifers
// SPDX-License-Identifier: MIT
//
// Coupling of the three zones in the doubly transformed domain.  The
// water-table correction in the saturated zone is
//     su(z_D) = rho1 e^{+mu z_D} + rho2 e^{-mu z_D},
// with rho1, rho2 fixed by admittance conditions at the two interfaces,
//     d su / d z|_{z=0} = q1b (S0 + su(0))      (aquitard),
//     d su / d z|_{z=1} = q_D (S1 + su(1))      (water table),
// where S0 = ddbar_sC(y, 0) and S1 = ddbar_sC(y, 1) are the source-term
// boundary values.  Writing a = q_D/mu, b = q1b/mu and em = e^{-mu}, the
// solution of the 2x2 system in overflow-free form is
//     D    = (1+a)(1-b) em^2 - (1-a)(1+b),
//     p1   = b (1+a) em S0 - a (1+b) S1,
//     p2   = b (1-a) S0 - a (1-b) em S1,
//     rho1 = em p1 / D,     rho2 = p2 / D,
// so that su(z) = [p1 e^{-mu (1-z)} + p2 e^{-mu z}] / D has every retained
// exponent non-positive on z in [0, 1].
//
// Sign conventions: q_D has negative real part (the vadose zone absorbs the
// water released at the falling table) and q1b non-negative real part; the
// Dirichlet limit q_D -> -inf forces su(1) -> -S1, i.e. zero total drawdown
// at the water table.
//
// A sealed base (q1b = 0) collapses the system to the closed form
//     rho1 = rho2 = -S1 / (2 [cosh(mu) - (mu/q_D) sinh(mu)]),
// kept here as a separate reduced branch (same algebra, evaluated through
// em to avoid cosh overflow) so the two routes can be compared in tests.

#pragma once

#include <cmath>
#include <complex>

#include "leakywell/aquitard.hpp"
#include "leakywell/confined_flow.hpp"
#include "leakywell/core.hpp"
#include "leakywell/model_types.hpp"
#include "leakywell/vadose_zone.hpp"

namespace leakywell {

enum class CouplingMode {
    automatic,  ///< general two-interface assembly (q1b = 0 degenerates cleanly)
    reduced     ///< sealed-base closed form; requires q1b = 0
};

/// Assemble the coupling coefficients from precomputed boundary values
/// S0 = ddbar_sC(y, z_D=0), S1 = ddbar_sC(y, z_D=1).
inline TransformPoint coupling_rho(const DimensionlessGroups& g, cplx beta, double y, double r_D,
                                   cplx S0, cplx S1, CouplingMode mode = CouplingMode::automatic) {
    TransformPoint tp;
    tp.beta = beta;
    tp.y = y;
    tp.mu = std::sqrt(cplx{y * y, 0.0} + beta / (g.K_D * r_D * r_D));
    tp.q_D = vadose_qD(g, beta, y, r_D);
    tp.q1b = aquitard_q1b(g, beta, y, r_D);
    if (tp.mu == cplx{0.0, 0.0}) throw singularity_error("coupling_rho: mu = 0");
    const cplx a = tp.q_D / tp.mu;
    const cplx em = std::exp(-tp.mu);
    const cplx em2 = em * em;
    if (mode == CouplingMode::reduced) {
        if (tp.q1b != cplx{0.0, 0.0})
            throw domain_error("coupling_rho: reduced mode requires a sealed base (q1b = 0)");
        // -S1 / (2 [cosh(mu) - (mu/q_D) sinh(mu)]), multiplied through by
        // a e^{-mu} to keep every exponential decaying.
        tp.delta = (1.0 + a) * em2 - (1.0 - a);
        if (tp.delta == cplx{0.0, 0.0}) throw singularity_error("coupling_rho: boundary determinant vanished");
        const cplx rho = -a * em * S1 / tp.delta;
        tp.rho1 = rho;
        tp.rho2 = rho;
        tp.p1 = -a * S1;
        tp.p2 = -a * em * S1;
        return tp;
    }
    const cplx b = tp.q1b / tp.mu;
    tp.delta = (1.0 + a) * (1.0 - b) * em2 - (1.0 - a) * (1.0 + b);
    if (tp.delta == cplx{0.0, 0.0}) throw singularity_error("coupling_rho: boundary determinant vanished");
    tp.p1 = b * (1.0 + a) * em * S0 - a * (1.0 + b) * S1;
    tp.p2 = b * (1.0 - a) * S0 - a * (1.0 - b) * em * S1;
    tp.rho1 = em * tp.p1 / tp.delta;
    tp.rho2 = tp.p2 / tp.delta;
    return tp;
}

/// Self-contained form: computes the boundary values from the source series.
inline TransformPoint coupling_rho(const DimensionlessGroups& g, cplx beta, double y, double r_D,
                                   const SeriesControls& ctl = SeriesControls{},
                                   CouplingMode mode = CouplingMode::automatic) {
    ConfinedSeries series(g, r_D, beta, ctl);
    const auto [S0, S1] = series.shat01(y);
    return coupling_rho(g, beta, y, r_D, S0, S1, mode);
}

/// Water-table correction at height z_D in [0, 1] from assembled coefficients.
inline cplx su_hat(const TransformPoint& tp, double z_D) {
    if (z_D < 0.0 || z_D > 1.0) throw domain_error("su_hat: z_D must lie in [0, 1]");
    return (tp.p1 * std::exp(-tp.mu * (1.0 - z_D)) + tp.p2 * std::exp(-tp.mu * z_D)) / tp.delta;
}

}  // namespace leakywell
