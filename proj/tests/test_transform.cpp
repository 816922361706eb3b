// Unit tests for the transform layer: de Hoog Laplace inversion, the
// Gaver-Stehfest cross-check route, the Bessel-zero-panelled oscillatory
// quadrature with epsilon acceleration, and the shared Gauss-Legendre and
// sequence-acceleration building blocks.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "leakywell/bessel_ik.hpp"
#include "leakywell/gauss_legendre.hpp"
#include "leakywell/laplace_inversion.hpp"
#include "leakywell/oscillatory_quad.hpp"
#include "leakywell/sequence_acceleration.hpp"
#include "reference_values.hpp"

using namespace leakywell;
namespace ref = leakywell::testref;

namespace {

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace

TEST_CASE("de Hoog inversion of closed-form pairs") {
    // unit step: F = 1/p
    CHECK(rel_err(invert_laplace_dehoog([](cplx p) { return 1.0 / p; }, 1.0), 1.0) < 1e-7);
    // ramp: F = 1/p^2 at t = 2
    CHECK(rel_err(invert_laplace_dehoog([](cplx p) { return 1.0 / (p * p); }, 2.0), 2.0) < 1e-7);
    // exponential decay: F = 1/(p+1) at t = 1
    CHECK(rel_err(invert_laplace_dehoog([](cplx p) { return 1.0 / (p + 1.0); }, 1.0), ref::inv_e) <
          1e-7);
    // bounded rise: F = 1/(p(p+1)) at t = 1
    CHECK(rel_err(invert_laplace_dehoog([](cplx p) { return 1.0 / (p * (p + 1.0)); }, 1.0),
                  ref::one_minus_inv_e) < 1e-7);
}

TEST_CASE("de Hoog configuration validation") {
    LaplaceConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.n_terms = 21;
    CHECK_THROWS_AS(cfg.validate(), domain_error);
    cfg.n_terms = 6;
    CHECK_THROWS_AS(cfg.validate(), domain_error);
    cfg = LaplaceConfig{};
    cfg.rel_tol = 1e-3;
    CHECK_THROWS_AS(cfg.validate(), domain_error);
    cfg = LaplaceConfig{};
    cfg.contour_shift_factor = 9.0;
    CHECK_THROWS_AS(cfg.validate(), domain_error);
    CHECK_THROWS_AS(invert_laplace_dehoog([](cplx p) { return 1.0 / p; }, 0.0), domain_error);
}

TEST_CASE("de Hoog quotient-difference breakdown carries a partial result") {
    // A transform with no decay (constant F) collapses the QD table: the
    // error must carry the unaccelerated Fourier partial sum and the number
    // of probes consumed.
    bool threw = false;
    try {
        invert_laplace_dehoog([](cplx) { return cplx{1.0, 0.0}; }, 1.0);
    } catch (const convergence_error& e) {
        threw = true;
        CHECK(std::isfinite(e.partial_result.real()));
        CHECK(e.steps_used > 0);
    }
    CHECK(threw);
}

TEST_CASE("Stehfest inversion of closed-form pairs") {
    // unit step
    CHECK(rel_err(invert_laplace_stehfest([](double p) { return 1.0 / p; }, 3.0), 1.0) < 1e-8);
    // exponential decay at N = 14
    CHECK(rel_err(invert_laplace_stehfest([](double p) { return 1.0 / (p + 1.0); }, 1.0, 14),
                  ref::inv_e) < 1e-5);
    // half-power: F = 1/p^{3/2} inverts to 2 sqrt(t/pi)
    CHECK(rel_err(invert_laplace_stehfest([](double p) { return 1.0 / (p * std::sqrt(p)); }, 1.0),
                  ref::two_over_sqrt_pi) < 1e-5);
    CHECK_THROWS_AS(invert_laplace_stehfest([](double p) { return 1.0 / p; }, 1.0, 13), domain_error);
    CHECK_THROWS_AS(invert_laplace_stehfest([](double p) { return 1.0 / p; }, 1.0, 20), domain_error);
}

TEST_CASE("Stehfest weights satisfy the step and ramp moment identities") {
    // sum V_k/k = 1 is exact in exact arithmetic, so its residual tracks the
    // cancellation among the alternating weights (|V_k| reaches 1.9e4 at
    // N = 8 and 7.9e10 at N = 18).  sum V_k/k^2 -> ln 2 only as N grows:
    // the residual is method truncation, decaying from ~1e-4 at N = 8 to
    // the ~3e-8 cancellation plateau by N = 16.
    struct Bound {
        int N;
        double step, ramp;
    };
    for (const Bound bd : {Bound{8, 1e-11, 5e-4}, Bound{12, 1e-9, 5e-6}, Bound{14, 1e-8, 2e-6},
                           Bound{18, 1e-5, 5e-7}}) {
        CAPTURE(bd.N);
        // the weight vector is 1-indexed: v[0] is an unused zero slot
        const std::vector<double> v = detail::stehfest_weights(bd.N);
        REQUIRE(static_cast<int>(v.size()) == bd.N + 1);
        REQUIRE(v[0] == 0.0);
        double s1 = 0.0, s2 = 0.0;
        for (int k = 1; k <= bd.N; ++k) {
            s1 += v[k] / k;
            s2 += v[k] / (static_cast<double>(k) * k);
        }
        CHECK(std::abs(s1 - 1.0) < bd.step);
        CHECK(std::abs(s2 - ref::ln2) < bd.ramp);
    }
}

TEST_CASE("dual-route agreement for a bounded monotone function over six decades") {
    // f(t) = 1 - e^{-t}; the primary inversion sanity gate
    auto F = [](cplx p) { return 1.0 / (p * (p + 1.0)); };
    auto Freal = [](double p) { return 1.0 / (p * (p + 1.0)); };
    for (double t = 1e-3; t <= 1.001e3; t *= 10.0) {
        CAPTURE(t);
        const double a = invert_laplace_dehoog(F, t);
        const double b = invert_laplace_stehfest(Freal, t);
        CHECK(std::abs(a - b) / std::abs(a) < 1e-3);
    }
}

TEST_CASE("oscillatory quadrature reproduces closed-form Hankel pairs") {
    // integral of e^{-y} J0(y) dy = 1/sqrt(2)
    const QuadOutcome a =
        integrate_oscillatory([](double y) { return cplx{std::exp(-y), 0.0}; }, 1.0);
    CHECK(rel_err(a.value.real(), ref::exp_j0_integral) < 1e-8);
    CHECK(std::abs(a.value.imag()) < 1e-12);
    CHECK(a.panels_used > 0);

    // integral of y/(y^2+1) J0(y) dy = K0(1); slowly decaying, needs the
    // epsilon extrapolant
    const QuadOutcome b =
        integrate_oscillatory([](double y) { return cplx{y / (y * y + 1.0), 0.0}; }, 1.0);
    CHECK(rel_err(b.value.real(), ref::lorentz_j0_integral) < 1e-8);
    CHECK(b.accelerated);

    // zero integrand terminates immediately and exactly
    const QuadOutcome z = integrate_oscillatory([](double) { return cplx{0.0, 0.0}; }, 2.0);
    CHECK(z.value == cplx{0.0, 0.0});
}

TEST_CASE("oscillatory quadrature is linear in the integrand") {
    auto g1 = [](double y) { return cplx{std::exp(-y), 0.0}; };
    auto g2 = [](double y) { return cplx{y / (y * y + 1.0), 0.0}; };
    const double al = 2.5, be = -0.75;
    const cplx lhs =
        integrate_oscillatory([&](double y) { return al * g1(y) + be * g2(y); }, 1.0).value;
    const cplx rhs =
        al * integrate_oscillatory(g1, 1.0).value + be * integrate_oscillatory(g2, 1.0).value;
    CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-8);
}

TEST_CASE("doubling the panel rule moves the result less than the tail tolerance") {
    OscillatoryQuadConfig wide;
    wide.panel_rule = 32;
    auto g1 = [](double y) { return cplx{std::exp(-y), 0.0}; };
    auto g2 = [](double y) { return cplx{y / (y * y + 1.0), 0.0}; };
    const cplx a16 = integrate_oscillatory(g1, 1.0).value;
    const cplx a32 = integrate_oscillatory(g1, 1.0, wide).value;
    CHECK(std::abs(a16 - a32) / std::abs(a16) < 1e-9);
    const cplx b16 = integrate_oscillatory(g2, 1.0).value;
    const cplx b32 = integrate_oscillatory(g2, 1.0, wide).value;
    CHECK(std::abs(b16 - b32) / std::abs(b16) < 1e-9);
}

TEST_CASE("panel exhaustion raises a diagnostic carrying the partial estimate") {
    OscillatoryQuadConfig capped;
    capped.panels_before_extrapolation = 4;
    capped.max_panels = 4;
    capped.tail_rel_tol = 1e-12;
    bool threw = false;
    try {
        integrate_oscillatory([](double y) { return cplx{1.0 / (1.0 + y * y), 0.0}; }, 1.0, capped);
    } catch (const convergence_error& e) {
        threw = true;
        CHECK(e.steps_used == 4);
        CHECK(std::isfinite(e.partial_result.real()));
    }
    CHECK(threw);
}

TEST_CASE("inner octave ladder resolves a feature far below the panel width") {
    // integral of y/(y^2+a^2) J0(y) dy = K0(a).  For a = 1e-3 the integrand
    // carries O(1) of its mass in a spike of width ~1e-3 at the origin while
    // the first Bessel-zero panel is ~2.4 wide: a fixed-order panel rule
    // cannot see the spike, and the run converges cleanly to a wrong value.
    // Declaring the feature width through inner_scale subdivides the first
    // panel geometrically and restores the closed form.
    const double a = 1e-3;
    auto g = [&](double y) { return cplx{y / (y * y + a * a), 0.0}; };
    const double want = bessel_k_complex(0, {a, 0.0}).real();  // K0(1e-3) ~ 7.02

    const double plain = integrate_oscillatory(g, 1.0).value.real();
    CHECK(rel_err(plain, want) > 1e-2);  // silently wrong without the ladder

    const double laddered = integrate_oscillatory(g, 1.0, OscillatoryQuadConfig{}, a).value.real();
    CHECK(rel_err(laddered, want) < 1e-7);

    // a ladder hint on a smooth integrand must not change the result
    auto smooth = [](double y) { return cplx{std::exp(-y), 0.0}; };
    const double s0 = integrate_oscillatory(smooth, 1.0).value.real();
    const double s1 = integrate_oscillatory(smooth, 1.0, OscillatoryQuadConfig{}, 0.05).value.real();
    CHECK(rel_err(s1, s0) < 1e-12);
    CHECK_THROWS_AS(integrate_oscillatory(smooth, 1.0, OscillatoryQuadConfig{}, -1.0), domain_error);
}

TEST_CASE("oscillatory quadrature argument validation") {
    auto g = [](double y) { return cplx{std::exp(-y), 0.0}; };
    CHECK_THROWS_AS(integrate_oscillatory(g, 0.0), domain_error);
    CHECK_THROWS_AS(integrate_oscillatory(g, -2.0), domain_error);
    OscillatoryQuadConfig bad;
    bad.panels_before_extrapolation = 3;
    CHECK_THROWS_AS(bad.validate(), domain_error);
    bad = OscillatoryQuadConfig{};
    bad.max_panels = 5;
    bad.panels_before_extrapolation = 6;
    CHECK_THROWS_AS(bad.validate(), domain_error);
    bad = OscillatoryQuadConfig{};
    bad.panel_rule = 4;
    CHECK_THROWS_AS(bad.validate(), domain_error);
}

TEST_CASE("epsilon acceleration of partial-sum sequences") {
    // geometric tail: Shanks is exact
    const AcceleratedValue geo = accelerate_sequence({{1.0, 0.0}, {0.5, 0.0}, {0.75, 0.0}});
    CHECK(std::abs(geo.value.real() - 2.0 / 3.0) < 1e-12);
    CHECK_FALSE(geo.used_fallback);

    // constant sequence is a fixed point (degenerate differences flag the
    // fallback but the value is still the constant)
    const AcceleratedValue cst = accelerate_sequence({{7.0, 0.0}, {7.0, 0.0}, {7.0, 0.0}});
    CHECK(cst.value.real() == 7.0);
    CHECK(cst.used_fallback);

    // arithmetic growth has no limit: fall back to the last partial sum
    const AcceleratedValue ari =
        accelerate_sequence({{1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}, {4.0, 0.0}, {5.0, 0.0}});
    CHECK(ari.value.real() == 5.0);
    CHECK(ari.used_fallback);

    // alternating harmonic series: ten terms suffice for 1e-6
    std::vector<cplx> partial;
    double s = 0.0;
    for (int k = 1; k <= 10; ++k) {
        s += (k % 2 == 1 ? 1.0 : -1.0) / k;
        partial.push_back({s, 0.0});
    }
    const AcceleratedValue alt = accelerate_sequence(partial);
    CHECK(std::abs(alt.value.real() - ref::ln2) < 1e-6);
    CHECK_FALSE(alt.used_fallback);

    CHECK_THROWS_AS(accelerate_sequence({{1.0, 0.0}, {2.0, 0.0}}), domain_error);
}

TEST_CASE("Gauss-Legendre rules: weights, symmetry, polynomial exactness") {
    const GaussLegendreRule& r16 = gauss_legendre_rule(16);
    REQUIRE(r16.nodes.size() == 16);
    double wsum = 0.0;
    for (double w : r16.weights) wsum += w;
    CHECK(std::abs(wsum - 2.0) < 1e-14);
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(std::abs(r16.nodes[i] + r16.nodes[15 - i]) < 1e-14);
        CHECK(std::abs(r16.weights[i] - r16.weights[15 - i]) < 1e-14);
    }
    // exact for degree <= 31: check x^20 and x^30 over [-1, 1]
    double m20 = 0.0, m30 = 0.0;
    for (std::size_t i = 0; i < 16; ++i) {
        m20 += r16.weights[i] * std::pow(r16.nodes[i], 20);
        m30 += r16.weights[i] * std::pow(r16.nodes[i], 30);
    }
    CHECK(rel_err(m20, 2.0 / 21.0) < 1e-13);
    CHECK(rel_err(m30, 2.0 / 31.0) < 1e-13);
    // cached rule objects are shared, not rebuilt
    CHECK(&gauss_legendre_rule(16) == &r16);
}
