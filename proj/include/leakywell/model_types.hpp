// leakywell: semi-analytic drawdown solver for leaky unconfined aquifers
// SPDX-License-Identifier: MIT
//
// Physical and dimensionless parameter bundles.
//
// Geometry and scalings (z positive upward, origin at the aquifer base):
//   aquitard:   -b_1 <= z <= 0      (dimensionless -R_b <= z_D <= 0)
//   aquifer:        0 <= z <= b     (0 <= z_D <= 1), screened on [d, l]
//                                   measured as depths below the aquifer top
//   vadose zone:    b <= z <= b + L (1 <= z_D <= 1 + L_D)
//
// All library math is dimensionless.  The Laplace variable used throughout,
// written beta, is conjugate to the dimensionless time t_s = (K_r/S_s) t/r^2;
// a caller holding the time-scaled variable p_D = p t uses beta = p_D / t_s.
// Dimensionless drawdown is s_D = (4 pi K_r b / Q) s.

#pragma once

#include <cmath>
#include <complex>

#include "leakywell/core.hpp"

namespace leakywell {

struct PhysicalSystem {
    struct Aquifer {
        double K_r = 0;  ///< radial hydraulic conductivity [L/T]
        double K_z = 0;  ///< vertical hydraulic conductivity [L/T]
        double S_s = 0;  ///< specific storage [1/L]
        double S_y = 0;  ///< specific yield [-]
        double b = 0;    ///< saturated thickness [L]
    };
    struct Aquitard {
        double K_r1 = 0;                ///< radial conductivity [L/T]
        double K_z1 = 0;                ///< vertical conductivity [L/T]
        double S_s1 = 0;                ///< specific storage [1/L]
        double b_1 = infinite_extent;   ///< thickness [L] or infinite sentinel
    };
    struct Vadose {
        double a_c = 0;                 ///< retention exponent [1/L]
        double a_k = 0;                 ///< Gardner conductivity exponent [1/L]
        double psi_a = 0;               ///< air-entry pressure head [L]
        double psi_k = 0;               ///< conductivity-model head offset [L]
        double L = infinite_extent;     ///< thickness [L] or infinite sentinel
        double theta_r = 0;             ///< residual moisture content [-]
        double theta_s = 0;             ///< saturated moisture content [-]
    };
    struct Well {
        double Q = 0;    ///< pumping rate [L^3/T]
        double r_w = 0;  ///< well radius [L]
        double C_w = 0;  ///< wellbore storage coefficient [L^2]
        double d = 0;    ///< screen top, depth below aquifer top [L]
        double l = 0;    ///< screen bottom, depth below aquifer top [L]
    };

    Aquifer aquifer;
    Aquitard aquitard;
    Vadose vadose;
    Well well;

    void validate() const {
        const auto& a = aquifer;
        if (!(a.K_r > 0) || !(a.K_z > 0) || !(a.S_s > 0) || !(a.b > 0))
            throw domain_error("PhysicalSystem: aquifer K_r, K_z, S_s, b must be positive");
        if (!(a.S_y > 0) || !(a.S_y < 1)) throw domain_error("PhysicalSystem: S_y must lie in (0, 1)");
        if (aquitard.K_r1 < 0 || aquitard.K_z1 < 0 || aquitard.S_s1 < 0)
            throw domain_error("PhysicalSystem: aquitard parameters must be non-negative");
        if (!(aquitard.b_1 > 0)) throw domain_error("PhysicalSystem: aquitard thickness must be positive");
        if (vadose.a_c < 0 || vadose.a_k < 0) throw domain_error("PhysicalSystem: a_c, a_k must be >= 0");
        if (!(vadose.L > 0)) throw domain_error("PhysicalSystem: vadose thickness must be positive");
        if (!(well.Q > 0) || !(well.r_w > 0)) throw domain_error("PhysicalSystem: Q and r_w must be positive");
        if (well.C_w < 0) throw domain_error("PhysicalSystem: C_w must be >= 0");
        if (!(well.d >= 0) || !(well.d < well.l) || !(well.l <= a.b))
            throw domain_error("PhysicalSystem: screen depths must satisfy 0 <= d < l <= b");
    }
};

/// Dimensionless parameter groups.  Figures and configs may specify these
/// directly; to_dimensionless() derives them from a PhysicalSystem.
struct DimensionlessGroups {
    double K_D = 1.0;      ///< K_z / K_r (aquifer anisotropy)
    double S_D = 0.0;      ///< S_y / (S_s b)
    double a_kD = 1.0;     ///< a_k b
    double a_cD = 1.0;     ///< a_c b
    double psi_aD = 0.0;   ///< psi_a / b
    double psi_kD = 0.0;   ///< psi_k / b
    double L_D = infinite_extent;  ///< L / b or infinite sentinel
    double r_wb = 1e-6;    ///< r_w / b (observation-scaled r_wD = r_wb / r_D)
    double C_wD = 0.0;     ///< C_w / (pi S_s b r_w^2)
    double d_D = 0.0;      ///< d / b
    double l_D = 1.0;      ///< l / b
    double R_Kr = 0.0;     ///< K_r1 / K_r
    double R_Kz = 0.0;     ///< K_z1 / K_z
    double R_Ss = 1.0;     ///< S_s1 / S_s
    double R_b = infinite_extent;  ///< b_1 / b or infinite sentinel

    /// aquitard/aquifer anisotropy ratio (K_z1/K_r1)/(K_z/K_r)
    [[nodiscard]] double R_KD() const { return R_Kz / R_Kr; }
    /// diffusivity-style ratio R_Kr / R_Ss
    [[nodiscard]] double R_alpha_s() const { return R_Kr / R_Ss; }
    /// exponent difference of the two constitutive laws
    [[nodiscard]] double lambda_D() const { return a_kD - a_cD; }
    /// common exponent when a_kD = a_cD
    [[nodiscard]] double kappa_D() const { return a_kD; }
    /// observation-scaled well radius r_w / r
    [[nodiscard]] double r_wD(double r_D) const { return r_wb / r_D; }
    /// true when the exponents coincide to working precision (the
    /// equal-exponents vadose branch; never divide by lambda_D then)
    [[nodiscard]] bool equal_exponents() const {
        return std::abs(a_kD - a_cD) <= 1e-12 * (a_kD + a_cD);
    }
    /// vadose storage-depth number B_D for Laplace variable beta at radius r_D
    [[nodiscard]] cplx B_D(cplx beta, double r_D) const {
        return beta * (S_D * a_cD * std::exp(a_kD * (psi_kD - psi_aD)) / (K_D * r_D * r_D));
    }

    void validate() const {
        if (!(K_D > 0)) throw domain_error("DimensionlessGroups: K_D must be positive");
        if (S_D < 0) throw domain_error("DimensionlessGroups: S_D must be >= 0");
        if (a_kD < 0 || a_cD < 0) throw domain_error("DimensionlessGroups: a_kD, a_cD must be >= 0");
        if (!(L_D > 0)) throw domain_error("DimensionlessGroups: L_D must be positive");
        if (!(r_wb > 0)) throw domain_error("DimensionlessGroups: r_wb must be positive");
        if (C_wD < 0) throw domain_error("DimensionlessGroups: C_wD must be >= 0");
        if (!(d_D >= 0) || !(d_D < l_D) || !(l_D <= 1.0))
            throw domain_error("DimensionlessGroups: screen must satisfy 0 <= d_D < l_D <= 1");
        if (R_Kr < 0 || R_Kz < 0 || R_Ss < 0)
            throw domain_error("DimensionlessGroups: R_Kr, R_Kz, R_Ss must be >= 0");
        if (!(R_b > 0)) throw domain_error("DimensionlessGroups: R_b must be positive");
    }
};

/// Truncation controls for the vertical cosine series.
struct SeriesControls {
    int max_cosine_terms = 200;
    double series_rel_tol = 1e-12;

    void validate() const {
        if (max_cosine_terms < 10) throw domain_error("SeriesControls: max_cosine_terms must be >= 10");
        if (!(series_rel_tol > 0) || series_rel_tol > 1e-3)
            throw domain_error("SeriesControls: series_rel_tol must be in (0, 1e-3]");
    }
};

/// Per-(beta, y) transform-domain bundle assembled by coupling_rho.
struct TransformPoint {
    cplx beta;   ///< Laplace variable conjugate to t_s (= p_D / t_s)
    double y;    ///< Hankel variable
    cplx mu;     ///< sqrt(y^2 + beta/(K_D r_D^2)), principal branch
    cplx q_D;    ///< water-table admittance (vadose zone)
    cplx q1b;    ///< aquitard admittance R_Kz mu1 tanh(mu1 R_b)
    cplx rho1;   ///< coefficient of e^{+mu z_D}
    cplx rho2;   ///< coefficient of e^{-mu z_D}
    cplx delta;  ///< e^{-mu}-normalized boundary determinant (pole guard)
    // Overflow-safe groupings: rho1 = e^{-mu} p1 / delta, rho2 = p2 / delta,
    // so the correction field is [p1 e^{-mu (1-z)} + p2 e^{-mu z}] / delta
    // with every retained exponent non-positive on [0, 1].
    cplx p1;
    cplx p2;
};

struct Dimensionalization {
    DimensionlessGroups groups;
    double r_D = 0;
    double t_s = 0;
};

/// Map a physical system plus an observation (r, t) to Table-style groups.
inline Dimensionalization to_dimensionless(const PhysicalSystem& sys, double r, double t) {
    sys.validate();
    if (!(r > 0) || !std::isfinite(r)) throw domain_error("to_dimensionless: r must be positive and finite");
    if (t < 0) throw domain_error("to_dimensionless: t must be >= 0");
    const double b = sys.aquifer.b;
    Dimensionalization out;
    DimensionlessGroups& g = out.groups;
    g.K_D = sys.aquifer.K_z / sys.aquifer.K_r;
    g.S_D = sys.aquifer.S_y / (sys.aquifer.S_s * b);
    g.a_kD = sys.vadose.a_k * b;
    g.a_cD = sys.vadose.a_c * b;
    g.psi_aD = sys.vadose.psi_a / b;
    g.psi_kD = sys.vadose.psi_k / b;
    g.L_D = is_infinite_extent(sys.vadose.L) ? infinite_extent : sys.vadose.L / b;
    g.r_wb = sys.well.r_w / b;
    g.C_wD = sys.well.C_w / (pi * sys.aquifer.S_s * b * sys.well.r_w * sys.well.r_w);
    g.d_D = sys.well.d / b;
    g.l_D = sys.well.l / b;
    g.R_Kr = sys.aquitard.K_r1 / sys.aquifer.K_r;
    g.R_Kz = sys.aquitard.K_z1 / sys.aquifer.K_z;
    g.R_Ss = sys.aquitard.S_s1 / sys.aquifer.S_s;
    g.R_b = is_infinite_extent(sys.aquitard.b_1) ? infinite_extent : sys.aquitard.b_1 / b;
    g.validate();
    out.r_D = r / b;
    out.t_s = (sys.aquifer.K_r / sys.aquifer.S_s) * t / (r * r);
    return out;
}

/// Reference drawdown scale Q / (4 pi K_r b); s_D = s / drawdown_scale.
inline double drawdown_scale(const PhysicalSystem& sys) {
    return sys.well.Q / (4.0 * pi * sys.aquifer.K_r * sys.aquifer.b);
}

}  // namespace leakywell
