// leakywell: semi-analytic drawdown solver for leaky unconfined aquifers
// SPDX-License-Identifier: MIT
//
// Scenario configuration: a JSON document describing one curve-generation
// job.  A scenario is either dimensionless (a "groups" block, the way type
// curves are published) or dimensional (a "system" block mapped through
// to_dimensionless); plus observations, a logarithmic time grid, optional
// numerics overrides, and an optional one-key parameter sweep.
//
// Parsing is strict: unknown keys are rejected everywhere, and validation
// failures name the offending field.  emit_scenario() writes the canonical
// form (all defaults filled, two-space indent), and
// parse(emit(parse(text))) is idempotent on that form.

#pragma once

#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "leakywell/core.hpp"
#include "leakywell/drawdown.hpp"
#include "leakywell/model_types.hpp"

namespace leakywell {

/// Configuration or I/O problem with a scenario document.
class scenario_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// One observation location: a point (z_lo == z_hi) or a vertical interval
/// averaged over [z_lo, z_hi], which must lie inside a single medium.
struct Observation {
    double r_D = 0.0;
    double z_lo = 0.0;
    double z_hi = 0.0;
    std::string medium;  ///< "aquifer" | "aquitard" | "vadose"
    double t_Bs = 0.0;   ///< dimensionless observation-lag constant (0 = none)
};

/// Logarithmic time grid in t_s, inclusive of both decade endpoints.
struct TimeGrid {
    double log10_start = -2.0;
    double log10_end = 4.0;
    int points_per_decade = 8;

    void validate() const {
        if (!(log10_start < log10_end)) throw scenario_error("time_grid: log10_start must be < log10_end");
        if (points_per_decade < 1) throw scenario_error("time_grid: points_per_decade must be >= 1");
        if (!std::isfinite(log10_start) || !std::isfinite(log10_end))
            throw scenario_error("time_grid: bounds must be finite");
    }

    [[nodiscard]] std::vector<double> times() const {
        validate();
        const int n = static_cast<int>(std::lround((log10_end - log10_start) * points_per_decade));
        std::vector<double> out;
        out.reserve(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i)
            out.push_back(std::pow(10.0, log10_start + static_cast<double>(i) / points_per_decade));
        return out;
    }
};

/// Optional one-key sweep; an empty key means a single un-swept curve.
struct Sweep {
    std::string key;
    std::vector<double> values;
};

struct ScenarioConfig {
    std::string id;
    DimensionlessGroups groups;
    std::optional<PhysicalSystem> system;  ///< set when specified dimensionally
    std::vector<Observation> observations;
    TimeGrid grid;
    Numerics numerics;
    Sweep sweep;

    void validate() const;
};

namespace detail {

inline const std::vector<std::string>& sweep_keys() {
    static const std::vector<std::string> keys = {
        "K_D", "S_D", "a_kD", "a_cD", "psi_aD", "psi_kD", "L_D", "r_wb", "C_wD",
        "d_D", "l_D", "R_Kr", "R_Kz", "R_Ss", "R_b", "R_K_iso",
    };
    return keys;
}

}  // namespace detail

/// Apply one sweep assignment to a copy of the groups.  "R_K_iso" is the
/// isotropic-aquitard composite key setting R_Kr and R_Kz together.
inline DimensionlessGroups apply_sweep(const DimensionlessGroups& g, const std::string& key, double value) {
    DimensionlessGroups out = g;
    if (key == "K_D") out.K_D = value;
    else if (key == "S_D") out.S_D = value;
    else if (key == "a_kD") out.a_kD = value;
    else if (key == "a_cD") out.a_cD = value;
    else if (key == "psi_aD") out.psi_aD = value;
    else if (key == "psi_kD") out.psi_kD = value;
    else if (key == "L_D") out.L_D = value;
    else if (key == "r_wb") out.r_wb = value;
    else if (key == "C_wD") out.C_wD = value;
    else if (key == "d_D") out.d_D = value;
    else if (key == "l_D") out.l_D = value;
    else if (key == "R_Kr") out.R_Kr = value;
    else if (key == "R_Kz") out.R_Kz = value;
    else if (key == "R_Ss") out.R_Ss = value;
    else if (key == "R_b") out.R_b = value;
    else if (key == "R_K_iso") { out.R_Kr = value; out.R_Kz = value; }
    else throw scenario_error("sweep.key: unknown parameter '" + key + "'");
    return out;
}

inline void ScenarioConfig::validate() const {
    if (id.empty()) throw scenario_error("id: must be non-empty");
    groups.validate();
    if (observations.empty()) throw scenario_error("observations: at least one required");
    for (std::size_t i = 0; i < observations.size(); ++i) {
        const Observation& o = observations[i];
        const std::string where = "observations[" + std::to_string(i) + "]";
        if (!(o.r_D > 0.0) || !std::isfinite(o.r_D)) throw scenario_error(where + ".r_D: must be positive and finite");
        if (o.z_lo > o.z_hi) throw scenario_error(where + ".z_D: interval must be ordered");
        if (o.t_Bs < 0.0 || !std::isfinite(o.t_Bs)) throw scenario_error(where + ".t_Bs: must be >= 0 and finite");
        double lo = -std::numeric_limits<double>::infinity(), hi = std::numeric_limits<double>::infinity();
        if (o.medium == "aquifer") { lo = 0.0; hi = 1.0; }
        else if (o.medium == "aquitard") { lo = is_infinite_extent(groups.R_b) ? lo : -groups.R_b; hi = 0.0; }
        else if (o.medium == "vadose") { lo = 1.0; hi = is_infinite_extent(groups.L_D) ? hi : 1.0 + groups.L_D; }
        else throw scenario_error(where + ".medium: must be one of aquifer/aquitard/vadose");
        if (o.z_lo < lo || o.z_hi > hi)
            throw scenario_error(where + ".z_D: [" + std::to_string(o.z_lo) + ", " + std::to_string(o.z_hi) +
                                 "] leaves the " + o.medium + " range; split intervals at media interfaces");
    }
    grid.validate();
    numerics.validate();
    if (!sweep.key.empty()) {
        bool known = false;
        for (const auto& k : detail::sweep_keys()) known = known || (k == sweep.key);
        if (!known) throw scenario_error("sweep.key: unknown parameter '" + sweep.key + "'");
        if (sweep.values.empty()) throw scenario_error("sweep.values: must be non-empty when a key is given");
        for (double v : sweep.values) apply_sweep(groups, sweep.key, v).validate();
    } else if (!sweep.values.empty()) {
        throw scenario_error("sweep.values: given without sweep.key");
    }
}

namespace detail {

using json = nlohmann::json;

inline void reject_unknown(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || (item.key() == a);
        if (!ok) throw scenario_error(where + ": unknown key '" + item.key() + "'");
    }
}

inline double num_field(const json& j, const std::string& where, const char* key, double fallback,
                        bool required = false) {
    if (!j.contains(key)) {
        if (required) throw scenario_error(where + "." + key + ": required");
        return fallback;
    }
    const json& v = j.at(key);
    if (v.is_string()) {
        // "inf" / "infinity" for unbounded thicknesses
        const std::string s = v.get<std::string>();
        if (s == "inf" || s == "infinity") return infinite_extent;
        throw scenario_error(where + "." + key + ": expected a number (or \"inf\")");
    }
    if (!v.is_number()) throw scenario_error(where + "." + key + ": expected a number");
    return v.get<double>();
}

inline int int_field(const json& j, const std::string& where, const char* key, int fallback) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_number_integer()) throw scenario_error(where + "." + key + ": expected an integer");
    return v.get<int>();
}

inline DimensionlessGroups parse_groups(const json& j) {
    reject_unknown(j, "groups",
                   {"K_D", "S_D", "a_kD", "a_cD", "psi_aD", "psi_kD", "L_D", "r_wb", "C_wD",
                    "d_D", "l_D", "R_Kr", "R_Kz", "R_Ss", "R_b"});
    DimensionlessGroups g;
    g.K_D = num_field(j, "groups", "K_D", g.K_D);
    g.S_D = num_field(j, "groups", "S_D", g.S_D);
    g.a_kD = num_field(j, "groups", "a_kD", g.a_kD);
    g.a_cD = num_field(j, "groups", "a_cD", g.a_cD);
    g.psi_aD = num_field(j, "groups", "psi_aD", g.psi_aD);
    g.psi_kD = num_field(j, "groups", "psi_kD", g.psi_kD);
    g.L_D = num_field(j, "groups", "L_D", g.L_D);
    g.r_wb = num_field(j, "groups", "r_wb", g.r_wb);
    g.C_wD = num_field(j, "groups", "C_wD", g.C_wD);
    g.d_D = num_field(j, "groups", "d_D", g.d_D);
    g.l_D = num_field(j, "groups", "l_D", g.l_D);
    g.R_Kr = num_field(j, "groups", "R_Kr", g.R_Kr);
    g.R_Kz = num_field(j, "groups", "R_Kz", g.R_Kz);
    g.R_Ss = num_field(j, "groups", "R_Ss", g.R_Ss);
    g.R_b = num_field(j, "groups", "R_b", g.R_b);
    return g;
}

inline PhysicalSystem parse_system(const json& j) {
    reject_unknown(j, "system", {"aquifer", "aquitard", "vadose", "well"});
    PhysicalSystem sys;
    if (!j.contains("aquifer") || !j.contains("well"))
        throw scenario_error("system: aquifer and well blocks are required");
    {
        const json& a = j.at("aquifer");
        reject_unknown(a, "system.aquifer", {"K_r", "K_z", "S_s", "S_y", "b"});
        sys.aquifer.K_r = num_field(a, "system.aquifer", "K_r", 0.0, true);
        sys.aquifer.K_z = num_field(a, "system.aquifer", "K_z", 0.0, true);
        sys.aquifer.S_s = num_field(a, "system.aquifer", "S_s", 0.0, true);
        sys.aquifer.S_y = num_field(a, "system.aquifer", "S_y", 0.0, true);
        sys.aquifer.b = num_field(a, "system.aquifer", "b", 0.0, true);
    }
    if (j.contains("aquitard")) {
        const json& a = j.at("aquitard");
        reject_unknown(a, "system.aquitard", {"K_r1", "K_z1", "S_s1", "b_1"});
        sys.aquitard.K_r1 = num_field(a, "system.aquitard", "K_r1", sys.aquitard.K_r1);
        sys.aquitard.K_z1 = num_field(a, "system.aquitard", "K_z1", sys.aquitard.K_z1);
        sys.aquitard.S_s1 = num_field(a, "system.aquitard", "S_s1", sys.aquitard.S_s1);
        sys.aquitard.b_1 = num_field(a, "system.aquitard", "b_1", sys.aquitard.b_1);
    }
    if (j.contains("vadose")) {
        const json& a = j.at("vadose");
        reject_unknown(a, "system.vadose", {"a_c", "a_k", "psi_a", "psi_k", "L", "theta_r", "theta_s"});
        sys.vadose.a_c = num_field(a, "system.vadose", "a_c", sys.vadose.a_c);
        sys.vadose.a_k = num_field(a, "system.vadose", "a_k", sys.vadose.a_k);
        sys.vadose.psi_a = num_field(a, "system.vadose", "psi_a", sys.vadose.psi_a);
        sys.vadose.psi_k = num_field(a, "system.vadose", "psi_k", sys.vadose.psi_k);
        sys.vadose.L = num_field(a, "system.vadose", "L", sys.vadose.L);
        sys.vadose.theta_r = num_field(a, "system.vadose", "theta_r", sys.vadose.theta_r);
        sys.vadose.theta_s = num_field(a, "system.vadose", "theta_s", sys.vadose.theta_s);
    }
    {
        const json& a = j.at("well");
        reject_unknown(a, "system.well", {"Q", "r_w", "C_w", "d", "l"});
        sys.well.Q = num_field(a, "system.well", "Q", 0.0, true);
        sys.well.r_w = num_field(a, "system.well", "r_w", 0.0, true);
        sys.well.C_w = num_field(a, "system.well", "C_w", sys.well.C_w);
        sys.well.d = num_field(a, "system.well", "d", sys.well.d);
        sys.well.l = num_field(a, "system.well", "l", 0.0, true);
    }
    return sys;
}

inline Observation parse_observation(const json& j, const std::string& where) {
    reject_unknown(j, where, {"r_D", "z_D", "medium", "t_Bs"});
    Observation o;
    o.r_D = num_field(j, where, "r_D", 0.0, true);
    if (!j.contains("z_D")) throw scenario_error(where + ".z_D: required");
    const json& z = j.at("z_D");
    if (z.is_number()) {
        o.z_lo = o.z_hi = z.get<double>();
    } else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number()) {
        const double a = z[0].get<double>(), b = z[1].get<double>();
        o.z_lo = std::min(a, b);
        o.z_hi = std::max(a, b);
    } else {
        throw scenario_error(where + ".z_D: expected a number or a [lo, hi] pair");
    }
    if (j.contains("medium")) {
        if (!j.at("medium").is_string()) throw scenario_error(where + ".medium: expected a string");
        o.medium = j.at("medium").get<std::string>();
    } else {
        // infer from the vertical span; intervals crossing an interface have
        // no single medium and fail scenario validation downstream
        o.medium = (o.z_hi <= 0.0) ? "aquitard" : (o.z_lo >= 1.0 ? "vadose" : "aquifer");
    }
    o.t_Bs = num_field(j, where, "t_Bs", 0.0);
    return o;
}

inline Numerics parse_numerics(const json& j) {
    reject_unknown(j, "numerics", {"laplace", "quad", "series", "stehfest_N", "coupling_mode"});
    Numerics n;
    if (j.contains("laplace")) {
        const json& a = j.at("laplace");
        reject_unknown(a, "numerics.laplace", {"n_terms", "rel_tol", "contour_shift_factor"});
        n.laplace.n_terms = int_field(a, "numerics.laplace", "n_terms", n.laplace.n_terms);
        n.laplace.rel_tol = num_field(a, "numerics.laplace", "rel_tol", n.laplace.rel_tol);
        n.laplace.contour_shift_factor =
            num_field(a, "numerics.laplace", "contour_shift_factor", n.laplace.contour_shift_factor);
    }
    if (j.contains("quad")) {
        const json& a = j.at("quad");
        reject_unknown(a, "numerics.quad",
                       {"panels_before_extrapolation", "max_panels", "panel_rule", "tail_rel_tol"});
        n.quad.panels_before_extrapolation =
            int_field(a, "numerics.quad", "panels_before_extrapolation", n.quad.panels_before_extrapolation);
        n.quad.max_panels = int_field(a, "numerics.quad", "max_panels", n.quad.max_panels);
        n.quad.panel_rule = int_field(a, "numerics.quad", "panel_rule", n.quad.panel_rule);
        n.quad.tail_rel_tol = num_field(a, "numerics.quad", "tail_rel_tol", n.quad.tail_rel_tol);
    }
    if (j.contains("series")) {
        const json& a = j.at("series");
        reject_unknown(a, "numerics.series", {"max_cosine_terms", "series_rel_tol"});
        n.series.max_cosine_terms = int_field(a, "numerics.series", "max_cosine_terms", n.series.max_cosine_terms);
        n.series.series_rel_tol = num_field(a, "numerics.series", "series_rel_tol", n.series.series_rel_tol);
    }
    n.stehfest_N = int_field(j, "numerics", "stehfest_N", n.stehfest_N);
    if (j.contains("coupling_mode")) {
        const std::string m = j.at("coupling_mode").get<std::string>();
        if (m == "automatic") n.coupling = CouplingMode::automatic;
        else if (m == "reduced") n.coupling = CouplingMode::reduced;
        else throw scenario_error("numerics.coupling_mode: must be 'automatic' or 'reduced'");
    }
    return n;
}

}  // namespace detail

/// Parse a scenario from JSON text.  Throws scenario_error with the JSON
/// parser's line/column message on syntax errors, or naming the offending
/// field on validation errors.
inline ScenarioConfig parse_scenario(const std::string& text) {
    using detail::json;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw scenario_error(std::string("syntax error: ") + e.what());
    }
    if (!j.is_object()) throw scenario_error("top level: expected a JSON object");
    detail::reject_unknown(j, "top level",
                           {"id", "groups", "system", "observations", "time_grid", "numerics", "sweep"});

    ScenarioConfig cfg;
    if (!j.contains("id") || !j.at("id").is_string()) throw scenario_error("id: required string");
    cfg.id = j.at("id").get<std::string>();

    const bool has_groups = j.contains("groups");
    const bool has_system = j.contains("system");
    if (has_groups == has_system)
        throw scenario_error("exactly one of 'groups' (dimensionless) or 'system' (dimensional) is required");
    if (has_groups) {
        cfg.groups = detail::parse_groups(j.at("groups"));
    } else {
        cfg.system = detail::parse_system(j.at("system"));
        cfg.system->validate();
        // Only the groups depend on the system; observation coordinates and
        // the time grid are dimensionless in both input styles.
        cfg.groups = to_dimensionless(*cfg.system, cfg.system->aquifer.b, 1.0).groups;
    }

    if (!j.contains("observations") || !j.at("observations").is_array())
        throw scenario_error("observations: required array");
    std::size_t idx = 0;
    for (const auto& jo : j.at("observations"))
        cfg.observations.push_back(detail::parse_observation(jo, "observations[" + std::to_string(idx++) + "]"));

    if (j.contains("time_grid")) {
        const detail::json& a = j.at("time_grid");
        detail::reject_unknown(a, "time_grid", {"log10_start", "log10_end", "points_per_decade"});
        cfg.grid.log10_start = detail::num_field(a, "time_grid", "log10_start", cfg.grid.log10_start);
        cfg.grid.log10_end = detail::num_field(a, "time_grid", "log10_end", cfg.grid.log10_end);
        cfg.grid.points_per_decade = detail::int_field(a, "time_grid", "points_per_decade", cfg.grid.points_per_decade);
    }
    if (j.contains("numerics")) cfg.numerics = detail::parse_numerics(j.at("numerics"));
    if (j.contains("sweep")) {
        const detail::json& a = j.at("sweep");
        detail::reject_unknown(a, "sweep", {"key", "values"});
        if (!a.contains("key") || !a.at("key").is_string()) throw scenario_error("sweep.key: required string");
        cfg.sweep.key = a.at("key").get<std::string>();
        if (!a.contains("values") || !a.at("values").is_array())
            throw scenario_error("sweep.values: required array");
        for (const auto& v : a.at("values")) {
            if (!v.is_number()) throw scenario_error("sweep.values: expected numbers");
            cfg.sweep.values.push_back(v.get<double>());
        }
    }

    cfg.validate();
    return cfg;
}

inline ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw scenario_error("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

/// Canonical JSON form: every field explicit, two-space indent, stable order.
inline std::string emit_scenario(const ScenarioConfig& cfg) {
    using detail::json;
    auto fin = [](double v) -> json {  // infinities have no JSON literal
        if (is_infinite_extent(v)) return json("inf");
        return json(v);
    };
    json j;
    j["id"] = cfg.id;
    if (cfg.system) {
        const PhysicalSystem& s = *cfg.system;
        j["system"] = {
            {"aquifer", {{"K_r", s.aquifer.K_r}, {"K_z", s.aquifer.K_z}, {"S_s", s.aquifer.S_s},
                         {"S_y", s.aquifer.S_y}, {"b", s.aquifer.b}}},
            {"aquitard", {{"K_r1", s.aquitard.K_r1}, {"K_z1", s.aquitard.K_z1},
                          {"S_s1", s.aquitard.S_s1}, {"b_1", fin(s.aquitard.b_1)}}},
            {"vadose", {{"a_c", s.vadose.a_c}, {"a_k", s.vadose.a_k}, {"psi_a", s.vadose.psi_a},
                        {"psi_k", s.vadose.psi_k}, {"L", fin(s.vadose.L)},
                        {"theta_r", s.vadose.theta_r}, {"theta_s", s.vadose.theta_s}}},
            {"well", {{"Q", s.well.Q}, {"r_w", s.well.r_w}, {"C_w", s.well.C_w},
                      {"d", s.well.d}, {"l", s.well.l}}},
        };
    } else {
        const DimensionlessGroups& g = cfg.groups;
        j["groups"] = {
            {"K_D", g.K_D}, {"S_D", g.S_D}, {"a_kD", g.a_kD}, {"a_cD", g.a_cD},
            {"psi_aD", g.psi_aD}, {"psi_kD", g.psi_kD}, {"L_D", fin(g.L_D)}, {"r_wb", g.r_wb},
            {"C_wD", g.C_wD}, {"d_D", g.d_D}, {"l_D", g.l_D}, {"R_Kr", g.R_Kr},
            {"R_Kz", g.R_Kz}, {"R_Ss", g.R_Ss}, {"R_b", fin(g.R_b)},
        };
    }
    j["observations"] = json::array();
    for (const Observation& o : cfg.observations) {
        json jo;
        jo["r_D"] = o.r_D;
        if (o.z_lo == o.z_hi) jo["z_D"] = o.z_lo;
        else jo["z_D"] = json::array({o.z_lo, o.z_hi});
        jo["medium"] = o.medium;
        jo["t_Bs"] = o.t_Bs;
        j["observations"].push_back(jo);
    }
    j["time_grid"] = {{"log10_start", cfg.grid.log10_start},
                      {"log10_end", cfg.grid.log10_end},
                      {"points_per_decade", cfg.grid.points_per_decade}};
    j["numerics"] = {
        {"laplace", {{"n_terms", cfg.numerics.laplace.n_terms}, {"rel_tol", cfg.numerics.laplace.rel_tol},
                     {"contour_shift_factor", cfg.numerics.laplace.contour_shift_factor}}},
        {"quad", {{"panels_before_extrapolation", cfg.numerics.quad.panels_before_extrapolation},
                  {"max_panels", cfg.numerics.quad.max_panels},
                  {"panel_rule", cfg.numerics.quad.panel_rule},
                  {"tail_rel_tol", cfg.numerics.quad.tail_rel_tol}}},
        {"series", {{"max_cosine_terms", cfg.numerics.series.max_cosine_terms},
                    {"series_rel_tol", cfg.numerics.series.series_rel_tol}}},
        {"stehfest_N", cfg.numerics.stehfest_N},
        {"coupling_mode", cfg.numerics.coupling == CouplingMode::reduced ? "reduced" : "automatic"},
    };
    if (!cfg.sweep.key.empty()) j["sweep"] = {{"key", cfg.sweep.key}, {"values", cfg.sweep.values}};
    return j.dump(2) + "\n";
}

}  // namespace leakywell
