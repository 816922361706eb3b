// Unit tests for the special-function layer: J0/J1 and general-order J,
// complex-argument K0/K1 (plain and exponentially scaled), general-order
// modified pairs, J0 zeros, and the stable hyperbolic helpers.  Frozen
// reference values live in reference_values.hpp and were generated with an
// arbitrary-precision oracle (see scripts/gen_reference_values.py).

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "leakywell/bessel_ik.hpp"
#include "leakywell/bessel_j.hpp"
#include "leakywell/core.hpp"
#include "leakywell/hyperbolic.hpp"
#include "reference_values.hpp"

using namespace leakywell;
namespace ref = leakywell::testref;

namespace {

double rel_err(cplx got, cplx want) {
    const double scale = std::abs(want);
    return scale > 0.0 ? std::abs(got - want) / scale : std::abs(got - want);
}

/// relative where the reference is O(1) or larger, absolute near zero
double mixed_err(double got, double want) { return std::abs(got - want) / (1.0 + std::abs(want)); }

}  // namespace

TEST_CASE("J0 and J1: exact endpoints and frozen grid") {
    CHECK(bessel_j0(0.0) == 1.0);
    CHECK(bessel_j1(0.0) == 0.0);
    // first J0 zero: the function must vanish there to 1e-10
    CHECK(std::abs(bessel_j0(2.404825557695773)) < 1e-10);

    for (const auto& row : ref::j01_grid) {
        CAPTURE(row.x);
        CHECK(mixed_err(bessel_j0(row.x), row.j0) < 1e-13);
        CHECK(mixed_err(bessel_j1(row.x), row.j1) < 1e-13);
    }
}

TEST_CASE("general-order J against frozen values") {
    for (const auto& row : ref::jnu_vals) {
        CAPTURE(row.nu, row.x);
        const double got = bessel_j(BesselOrder{row.nu}, row.x);
        CHECK(rel_err(got, row.j) < 1e-11);
    }
    // integer dispatch agrees with the dedicated kernels
    CHECK(bessel_j(BesselOrder{0.0}, 3.7) == bessel_j0(3.7));
    CHECK(bessel_j(BesselOrder{1.0}, 3.7) == bessel_j1(3.7));
    CHECK_THROWS_AS(bessel_j(BesselOrder{-1.0}, 1.0), domain_error);
    CHECK_THROWS_AS(bessel_j(BesselOrder{1.0}, -2.0), domain_error);
}

TEST_CASE("J0 zeros: frozen anchors, extension values, spacing") {
    CHECK(rel_err(j0_zeros(1), 2.404825557695773) < 1e-12);
    CHECK(rel_err(j0_zeros(2), 5.520078110286311) < 1e-12);
    for (const auto& zc : ref::j0_zero_checks) {
        CAPTURE(zc.k);
        CHECK(rel_err(j0_zeros(zc.k), zc.value) < 1e-12);
    }
    // monotone increasing with gaps approaching pi
    for (int k = 1; k < 60; ++k) CHECK(j0_zeros(k + 1) > j0_zeros(k));
    CHECK(std::abs((j0_zeros(51) - j0_zeros(50)) - pi) < 1e-4);
    CHECK_THROWS_AS(j0_zeros(0), domain_error);
}

TEST_CASE("complex K0/K1: frozen rows, scaled variants") {
    for (const auto& row : ref::k01_rows) {
        CAPTURE(row.z.real(), row.z.imag());
        CHECK(rel_err(bessel_k_complex(0, row.z), row.k0) < 1e-12);
        CHECK(rel_err(bessel_k_complex(1, row.z), row.k1) < 1e-12);
        CHECK(rel_err(bessel_k_complex_scaled(0, row.z), row.k0s) < 1e-12);
        CHECK(rel_err(bessel_k_complex_scaled(1, row.z), row.k1s) < 1e-12);
    }
    CHECK(rel_err(bessel_k_complex(0, {1.0, 0.0}), ref::k0_of_1) < 1e-13);
    CHECK(rel_err(bessel_k_complex(1, {1.0, 0.0}), ref::k1_of_1) < 1e-13);
    // exponential decay: the unscaled value underflows toward zero
    CHECK(std::abs(bessel_k_complex(0, {400.0, 0.0})) < 1e-170);
}

TEST_CASE("complex K0/K1: argument domain") {
    CHECK_THROWS_AS(bessel_k_complex(0, {0.0, 0.0}), singularity_error);
    CHECK_THROWS_AS(bessel_k_complex(1, {-1.0, 0.5}), domain_error);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(bessel_k_complex(0, {nan, 0.0}), domain_error);
}

TEST_CASE("general-order modified pairs against frozen rows") {
    for (const auto& row : ref::iknu_rows) {
        CAPTURE(row.nu, row.z.real(), row.z.imag());
        const ModifiedBesselResult mb = bessel_modified_general(BesselOrder{row.nu}, row.z);
        CHECK(rel_err(mb.i_nu.to_complex(), row.inu) < 1e-11);
        CHECK(rel_err(mb.i_nup1.to_complex(), row.inu1) < 1e-11);
        CHECK(rel_err(mb.k_nu.to_complex(), row.knu) < 1e-11);
        CHECK(rel_err(mb.k_nup1.to_complex(), row.knu1) < 1e-11);
    }
}

TEST_CASE("half-order closed form I_{1/2}(z) = sqrt(2/(pi z)) sinh z") {
    const ModifiedBesselResult mb = bessel_modified_general(BesselOrder{0.5}, {1.0, 0.0});
    CHECK(rel_err(mb.i_nu.to_complex(), ref::i_half_of_1) < 1e-12);
    for (double x : {0.3, 2.0, 11.0}) {
        const cplx got = bessel_modified_general(BesselOrder{0.5}, {x, 0.0}).i_nu.to_complex();
        const double want = std::sqrt(2.0 / (pi * x)) * std::sinh(x);
        CAPTURE(x);
        CHECK(rel_err(got, want) < 1e-12);
    }
}

TEST_CASE("large-order ratios via scaled division") {
    for (const auto& row : ref::ik_ratio_rows) {
        CAPTURE(row.nu);
        const ModifiedBesselResult mb = bessel_modified_general(BesselOrder{row.nu}, row.z);
        CHECK(rel_err((mb.i_nup1 / mb.i_nu).to_complex(), row.iratio) < 1e-10);
        CHECK(rel_err((mb.k_nup1 / mb.k_nu).to_complex(), row.kratio) < 1e-10);
    }
    // shared asymptotic prefactor: K_{nu+1}/K_nu -> 1 along the real axis
    const ModifiedBesselResult far = bessel_modified_general(BesselOrder{3.0}, {1e4, 0.0});
    CHECK(std::abs((far.k_nup1 / far.k_nu).to_complex() - 1.0) < 1e-3);
}

TEST_CASE("modified pair: z = 0 and order-cap domain") {
    CHECK_THROWS_AS(bessel_modified_general(BesselOrder{2.0}, {0.0, 0.0}), singularity_error);
    CHECK_THROWS_AS(bessel_modified_general(BesselOrder{2.1e4}, {1.0, 0.0}), domain_error);
    // I_nu -> 0 as z -> 0 for nu > 0 (the z = 0 point itself is excluded
    // because K_nu is singular there)
    const cplx tiny = bessel_modified_general(BesselOrder{2.0}, {1e-8, 0.0}).i_nu.to_complex();
    CHECK(std::abs(tiny) < 1e-15);
}

TEST_CASE("Wronskian identity on random order/argument pairs") {
    std::mt19937 rng(7u);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 300; ++i) {
        const double nu = 5.0 * unif(rng);
        const double x = 0.1 + 29.9 * unif(rng);
        const ModifiedBesselResult mb = bessel_modified_general(BesselOrder{nu}, {x, 0.0});
        const cplx w = mb.i_nu.to_complex() * mb.k_nup1.to_complex() +
                       mb.i_nup1.to_complex() * mb.k_nu.to_complex();
        worst = std::max(worst, rel_err(w, cplx{1.0 / x, 0.0}));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("small-argument K1 limit drives the vanishing-radius reduction") {
    // x K1(x) -> 1 as x -> 0+
    const double x = 1e-4;
    const cplx k1 = bessel_k_complex(1, {x, 0.0});
    CHECK(std::abs(x * k1.real() - 1.0) < 1e-6);
}

TEST_CASE("stable hyperbolic helpers") {
    CHECK(stable_tanh({700.0, 0.0}) == cplx{1.0, 0.0});  // saturates, no overflow
    CHECK(rel_err(stable_cosh_ratio({0.0, 0.0}, {1.0, 0.0}), ref::cosh_ratio_0_1) < 1e-13);
    CHECK(stable_cosh_ratio({3.7, 0.4}, {3.7, 0.4}) == cplx{1.0, 0.0});
    // agreement with the naive formula where it cannot overflow
    const cplx a{1.2, 0.7}, b{2.1, -0.3};
    CHECK(rel_err(stable_cosh_ratio(a, b), std::cosh(a) / std::cosh(b)) < 1e-13);
    CHECK(rel_err(stable_tanh({0.8, 1.1}), std::tanh(cplx{0.8, 1.1})) < 1e-13);
    // deep-argument ratio equals the exponential difference
    CHECK(rel_err(stable_cosh_ratio({1000.3, 2.0}, {1000.0, 2.0}), std::exp(cplx{0.3, 0.0})) < 1e-12);
}

TEST_CASE("pure functions give bit-identical repeat values") {
    CHECK(bessel_j0(17.3) == bessel_j0(17.3));
    CHECK(j0_zeros(333) == j0_zeros(333));
    const cplx z{2.0, 7.0};
    CHECK(bessel_k_complex(0, z) == bessel_k_complex(0, z));
}

TEST_CASE("validation of order and policy types") {
    CHECK_THROWS_AS(BesselOrder{-0.5}.validate(), domain_error);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(BesselOrder{inf}.validate(), domain_error);
    AccuracyPolicy pol;
    CHECK_NOTHROW(pol.validate());
    pol.rel_tol = 0.0;
    CHECK_THROWS_AS(pol.validate(), domain_error);
    pol.rel_tol = 1e-8;
    pol.max_terms = 10;
    CHECK_THROWS_AS(pol.validate(), domain_error);
}
