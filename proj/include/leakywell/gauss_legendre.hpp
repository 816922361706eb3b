// leakywell: semi-analytic drawdown solver for leaky unconfined aquifers
// SPDX-License-Identifier: MIT
//
// Gauss–Legendre quadrature rules on [-1, 1].  Nodes are the roots of the
// Legendre polynomial P_n found by Newton iteration from the Chebyshev-like
// initial guess cos(pi (i - 1/4) / (n + 1/2)); weights w = 2 / ((1 - x^2)
// P_n'(x)^2).  Rules are cached per order; the cache is guarded by a mutex
// and entries are immutable once built, so concurrent lookups are safe.

#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "leakywell/core.hpp"

namespace leakywell {

struct GaussLegendreRule {
    std::vector<double> nodes;    ///< ascending in (-1, 1)
    std::vector<double> weights;  ///< positive, sum to 2
};

namespace detail {

inline GaussLegendreRule build_gauss_legendre(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 1; i <= half; ++i) {
        double x = std::cos(pi * (i - 0.25) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Legendre recurrence: (j+1) P_{j+1} = (2j+1) x P_j - j P_{j-1}
            double p0 = 1.0, p1 = x;
            for (int j = 1; j < n; ++j) {
                double p2 = ((2.0 * j + 1.0) * x * p1 - j * p0) / (j + 1.0);
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i - 1] = -x;  // roots found from the +1 end; store ascending
        rule.nodes[n - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i - 1] = w;
        rule.weights[n - i] = w;
    }
    return rule;
}

}  // namespace detail

/// Cached n-point Gauss–Legendre rule; thread-safe, immutable after build.
inline const GaussLegendreRule& gauss_legendre_rule(int n) {
    if (n < 1 || n > 512) throw domain_error("gauss_legendre_rule: order must be in [1, 512]");
    static std::map<int, GaussLegendreRule> cache;
    static std::mutex guard;
    std::lock_guard<std::mutex> lock(guard);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, detail::build_gauss_legendre(n)).first;
    return it->second;
}

}  // namespace leakywell
