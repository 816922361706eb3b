// leakywell: semi-analytic drawdown solver for leaky unconfined aquifers
// SPDX-License-Identifier: MIT
//
// Shipped type-curve scenarios (fig2a .. fig9).  Common base: isotropic
// aquifer (K_D = 1), S_D = 10^3, exponential constitutive exponents
// a_kD = a_cD = 10 with psi_aD = psi_kD, wellbore storage C_wD = 10^2,
// screen over the top 60% of the aquifer (d_D = 0, l_D = 0.6),
// r_wb = 0.02, semi-infinite vadose zone and aquitard.  Each scenario
// sweeps the one parameter its figure varies.
//
// Saturated-zone curves (fig2a..fig6) observe at r_D = 0.5 over
// t_s in [1e-2, 1e4]; aquitard curves (fig7..fig9) observe at r_D = 0.2,
// z_D = -0.25 over t_s in [1e1, 1e7]; eight points per decade throughout.

#pragma once

#include <string>
#include <vector>

#include "leakywell/scenario.hpp"

namespace leakywell {

inline const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {
        "fig2a", "fig2b", "fig3a", "fig3b", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9",
    };
    return names;
}

/// Construct a shipped scenario by name; throws scenario_error for unknown
/// names (list with builtin_names()).
inline ScenarioConfig builtin_scenario(const std::string& name) {
    DimensionlessGroups base;
    base.K_D = 1.0;
    base.S_D = 1e3;
    base.a_kD = 10.0;
    base.a_cD = 10.0;
    base.psi_aD = 0.0;
    base.psi_kD = 0.0;
    base.L_D = infinite_extent;
    base.r_wb = 0.02;
    base.C_wD = 1e2;
    base.d_D = 0.0;
    base.l_D = 0.6;
    base.R_Kr = 0.0;
    base.R_Kz = 0.0;
    base.R_Ss = 1.0;
    base.R_b = infinite_extent;

    ScenarioConfig cfg;
    cfg.id = name;
    cfg.groups = base;
    cfg.grid = TimeGrid{-2.0, 4.0, 8};

    Observation obs;
    obs.r_D = 0.5;
    obs.medium = "aquifer";

    auto aquitard_obs = [&]() {
        cfg.grid = TimeGrid{1.0, 7.0, 8};
        obs.r_D = 0.2;
        obs.z_lo = obs.z_hi = -0.25;
        obs.medium = "aquitard";
        cfg.groups.R_Ss = 1e2;
        cfg.groups.R_Kr = 1e-2;
        cfg.groups.R_Kz = 1e-2;
    };

    if (name == "fig2a" || name == "fig2b") {
        obs.z_lo = obs.z_hi = (name == "fig2a") ? 0.75 : 0.25;
        cfg.groups.R_Kr = 1e-2;
        cfg.groups.R_Ss = 1e-2;
        cfg.sweep = {"R_Kz", {1e-2, 0.0}};  // second value: the no-leak limit
    } else if (name == "fig3a") {
        obs.z_lo = obs.z_hi = 0.25;
        cfg.groups.R_Kr = 1e-6;
        cfg.groups.R_Ss = 1e-2;
        cfg.sweep = {"R_Kz", {0.0, 1e-3, 1e-2, 1e-1}};
    } else if (name == "fig3b") {
        obs.z_lo = obs.z_hi = 0.25;
        cfg.groups.R_Kr = 1.0;
        cfg.groups.R_Ss = 1e-2;
        cfg.sweep = {"R_Kz", {0.0, 1e-2, 1e-1, 1.0}};
    } else if (name == "fig4") {
        obs.z_lo = obs.z_hi = 0.25;
        cfg.groups.R_Kz = 0.1;
        cfg.groups.R_Ss = 1e-2;
        cfg.sweep = {"R_Kr", {1e-6, 1e-2, 1e-1, 1.0}};
    } else if (name == "fig5") {
        obs.z_lo = obs.z_hi = 0.25;
        cfg.groups.R_Ss = 1.0;
        cfg.sweep = {"R_K_iso", {0.0, 1e-2, 1e-1, 1.0, 2.0}};
    } else if (name == "fig6") {
        obs.z_lo = obs.z_hi = 0.25;
        cfg.groups.R_Ss = 1e2;
        cfg.groups.R_Kr = 1e-2;
        cfg.groups.R_Kz = 1e-2;
        cfg.sweep = {"R_b", {0.5, 1.0, 2.0, 4.0, 8.0, 16.0}};
    } else if (name == "fig7") {
        aquitard_obs();
        cfg.sweep = {"C_wD", {1.0, 10.0, 1e2, 1e3}};
    } else if (name == "fig8") {
        aquitard_obs();
        cfg.groups.a_cD = 1.0;
        cfg.sweep = {"a_kD", {1.0, 3.0, 10.0, 100.0}};
    } else if (name == "fig9") {
        aquitard_obs();
        cfg.groups.a_kD = 1e3;
        cfg.sweep = {"a_cD", {1.0, 10.0, 100.0, 1000.0}};
    } else {
        throw scenario_error("unknown builtin scenario '" + name + "'");
    }

    cfg.observations.push_back(obs);
    cfg.validate();
    return cfg;
}

}  // namespace leakywell
