// leakywell: semi-analytic drawdown solver for leaky unconfined aquifers
// SPDX-License-Identifier: MIT
//
// Wynn's epsilon algorithm (the recursive form of the Shanks transform):
//   eps_{-1}^{(i)} = 0,  eps_0^{(i)} = S_i,
//   eps_{k+1}^{(i)} = eps_{k-1}^{(i+1)} + 1 / (eps_k^{(i+1)} - eps_k^{(i)}).
// Even columns are the accelerated estimates (exact on geometric tails);
// odd columns are scaffolding.  The returned value is the deepest entry of
// the last completed even column.

#pragma once

#include <cmath>
#include <vector>

#include "leakywell/core.hpp"

namespace leakywell {

struct AcceleratedValue {
    cplx value{0.0, 0.0};
    /// true when a difference in the epsilon table degenerated (vanished)
    /// before any acceleration was extracted; value is then the last raw
    /// partial sum, which is exact when the tail already settled.
    bool used_fallback = false;
};

/// Epsilon-algorithm extrapolant of a sequence of partial sums (length >= 3).
inline AcceleratedValue accelerate_sequence(const std::vector<cplx>& partial_sums) {
    const int n = static_cast<int>(partial_sums.size());
    if (n < 3) throw domain_error("accelerate_sequence: need at least 3 partial sums");

    std::vector<cplx> prev(static_cast<std::size_t>(n), cplx{0.0, 0.0});  // column k-1
    std::vector<cplx> cur = partial_sums;                                 // column k
    cplx best = partial_sums.back();
    bool have_even = false;
    for (int k = 1; k < n; ++k) {
        std::vector<cplx> next(cur.size() - 1);
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            const cplx diff = cur[i + 1] - cur[i];
            if (std::abs(diff) < 1e-305) {
                // 1/diff would overflow: the table has degenerated.  The
                // last settled even-column value (or the raw tail sum when
                // none exists yet) is the best available answer.
                return {have_even ? best : partial_sums.back(), !have_even};
            }
            next[i] = prev[i + 1] + 1.0 / diff;
        }
        prev = std::move(cur);
        cur = std::move(next);
        if (k % 2 == 0) {
            best = cur.back();
            have_even = true;
        }
    }
    return {best, false};
}

}  // namespace leakywell
