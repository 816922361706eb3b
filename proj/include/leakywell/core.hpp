// leakywell: semi-analytic drawdown solver for leaky unconfined aquifers
// SPDX-License-Identifier: MIT
#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace leakywell {

using cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

/// Sentinel used wherever a thickness may be unbounded (R_b, L_D).
inline constexpr double infinite_extent = std::numeric_limits<double>::infinity();

inline bool is_infinite_extent(double v) { return std::isinf(v) && v > 0; }

/// Invalid argument to a numerical routine (non-finite input, value outside
/// the documented domain, inconsistent geometry).
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Evaluation at a point where the requested function is singular
/// (e.g. K0 at z = 0).
class singularity_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iterative scheme (series, continued fraction, quadrature tail,
/// acceleration table) failed to reach its tolerance.  Carries the best
/// available partial result so callers can degrade gracefully.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, cplx partial, int steps)
        : std::runtime_error(what), partial_result(partial), steps_used(steps) {}

    cplx partial_result{};
    int steps_used{};
};

/// Accuracy request shared by the special-function evaluators.
struct AccuracyPolicy {
    double rel_tol = 1e-14;  ///< target relative tolerance, in (0, 1e-3]
    int max_terms = 400;     ///< series/iteration cap, >= 50

    void validate() const {
        if (!(rel_tol > 0.0) || rel_tol > 1e-3)
            throw domain_error("AccuracyPolicy.rel_tol must lie in (0, 1e-3]");
        if (max_terms < 50)
            throw domain_error("AccuracyPolicy.max_terms must be >= 50");
    }
};

/// Real non-negative Bessel order.  Kernel work uses {0, 1}; the vadose-zone
/// profile requires general real order.
struct BesselOrder {
    double value = 0.0;

    void validate() const {
        if (!std::isfinite(value) || value < 0.0)
            throw domain_error("BesselOrder must be finite and non-negative");
    }
};

}  // namespace leakywell
