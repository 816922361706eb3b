// leakywell command-line front end.
//
// Subcommands:
//   run <config>    evaluate a scenario file, write CSV + gnuplot script
//   builtin <name>  same for a shipped scenario (also writes its JSON config)
//   list-builtins   print the shipped scenario names
//   check           self-test: Hankel round trip + dual-route inversion
//
// Exit codes: 0 success; 1 partial failures present (non-converged points or
// cross-check discrepancy above 1e-3); 2 configuration error; 3 total
// failure (all points failed, or an I/O error).

#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "leakywell/builtin_scenarios.hpp"
#include "leakywell/confined_flow.hpp"
#include "leakywell/drawdown.hpp"
#include "leakywell/oscillatory_quad.hpp"
#include "leakywell/output.hpp"
#include "leakywell/scenario.hpp"
#include "leakywell/scenario_run.hpp"

namespace {

using namespace leakywell;

struct Options {
    std::string out_dir = ".";
    int threads = 0;  ///< 0 = LEAKYWELL_THREADS env var, then hardware count
    bool cross_check = false;
    double tol_override = 0.0;  ///< 0 = keep configured tolerances
};

void add_common(CLI::App* sub, Options& opt, bool with_outputs) {
    if (with_outputs) {
        sub->add_option("--out-dir", opt.out_dir, "directory for CSV/plot outputs (created if missing)");
        sub->add_flag("--cross-check", opt.cross_check,
                      "re-invert converged points with the Stehfest route and report the discrepancy");
    }
    sub->add_option("--threads", opt.threads,
                    "worker threads (default: LEAKYWELL_THREADS env var, then hardware count)");
    sub->add_option("--tol-override", opt.tol_override,
                    "override quadrature tail_rel_tol and Laplace rel_tol (Laplace capped at 1e-4)");
}

void apply_tol(Numerics& num, double tol) {
    if (tol <= 0.0) return;
    num.quad.tail_rel_tol = tol;
    num.laplace.rel_tol = std::min(tol, 1e-4);
    num.validate();  // absurd overrides are configuration errors
}

/// 0 all converged; 1 partials or cross-check above 1e-3; 3 nothing converged.
int analyze_exit(const std::vector<CurveResult>& curves) {
    std::size_t points = 0, failed = 0, nonconverged = 0;
    double cross = -1.0;
    for (const CurveResult& c : curves) {
        for (const CurvePoint& p : c.points) {
            ++points;
            if (p.flag == "failed") ++failed;
            if (p.flag != "converged") ++nonconverged;
        }
        cross = std::max(cross, c.cross_check_max);
    }
    if (points == 0 || failed == points) return 3;
    if (nonconverged > 0 || cross > 1e-3) return 1;
    return 0;
}

int execute_scenario(ScenarioConfig cfg, const Options& opt, bool write_config_json) {
    apply_tol(cfg.numerics, opt.tol_override);
    cfg.validate();

    namespace fs = std::filesystem;
    fs::create_directories(opt.out_dir);
    if (write_config_json) {
        const std::string cfg_path = (fs::path(opt.out_dir) / (cfg.id + ".json")).string();
        std::ofstream os(cfg_path);
        if (!os) throw io_error("cannot open for writing: " + cfg_path);
        os << emit_scenario(cfg);
        if (!os) throw io_error("write failed: " + cfg_path);
    }

    const std::vector<CurveResult> curves = run_scenario(cfg, opt.threads, opt.cross_check);

    const std::string csv_name = cfg.id + ".csv";
    const std::string csv_path = (fs::path(opt.out_dir) / csv_name).string();
    const std::string gp_path = (fs::path(opt.out_dir) / (cfg.id + ".gp")).string();
    emit_csv(curves, csv_path);
    emit_plot_script(curves, gp_path, csv_name);

    std::cout << convergence_report(curves);
    std::cout << "wrote " << csv_path << " and " << gp_path << "\n";
    return analyze_exit(curves);
}

/// Self-test 1: the vertical-series solution against its own Hankel
/// representation at fixed-seed random nodes.  Ranges keep the direct value
/// well above the cancellation floor of double-precision panel sums
/// (sqrt(beta) * r_D <~ 6, so K0 of it stays above ~1e-3 of the integrand).
double roundtrip_worst(const DimensionlessGroups& g, const Numerics& num, int nodes,
                       unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double r_D = std::pow(10.0, -1.0 + 1.3 * unif(rng));   // [0.1, 2]
        const double z_D = unif(rng);
        const double beta = std::pow(10.0, -2.0 + 3.0 * unif(rng));  // [0.01, 10]
        ConfinedSeries series(g, r_D, cplx{beta, 0.0}, num.series);
        const cplx direct = series.sbar_C(z_D);
        const double c = std::sqrt(g.K_D) * r_D;
        const double inner = detail::hankel_inner_scale(g, cplx{beta, 0.0}, r_D);
        const QuadOutcome q = integrate_oscillatory(
            [&](double y) { return y * series.shat(y, z_D); }, c, num.quad, inner);
        worst = std::max(worst, std::abs(q.value - direct) / std::abs(direct));
    }
    return worst;
}

int cmd_check(const Options& opt) {
    ScenarioConfig cfg = builtin_scenario("fig2b");
    apply_tol(cfg.numerics, opt.tol_override);

    const double rt = roundtrip_worst(cfg.groups, cfg.numerics, 10, 424243u);
    const bool rt_ok = rt <= 1e-4;
    std::cout << (rt_ok ? "PASS" : "FAIL") << " hankel-round-trip: max rel err " << rt
              << " (tol 1e-4, 10 nodes)\n";

    // trimmed grid: the dual-route comparison needs coverage, not density
    cfg.grid.points_per_decade = 2;
    const std::vector<CurveResult> curves = run_scenario(cfg, opt.threads, /*cross_check=*/true);
    double cross = 0.0;
    std::size_t nonconverged = 0;
    for (const CurveResult& c : curves) {
        cross = std::max(cross, c.cross_check_max);
        for (const CurvePoint& p : c.points)
            if (p.flag != "converged") ++nonconverged;
    }
    const bool cross_ok = cross <= 1e-3 && nonconverged == 0;
    std::cout << (cross_ok ? "PASS" : "FAIL") << " cross-inversion: max rel discrepancy " << cross
              << " (tol 1e-3), non-converged points " << nonconverged << "\n";

    return rt_ok && cross_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"leakywell: dimensionless type curves for a pumped leaky unconfined aquifer"};
    app.require_subcommand(1);

    Options opt;
    std::string config_path, builtin_name;

    CLI::App* run_cmd = app.add_subcommand("run", "evaluate a scenario config file");
    run_cmd->add_option("config", config_path, "scenario JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    add_common(run_cmd, opt, /*with_outputs=*/true);

    CLI::App* builtin_cmd = app.add_subcommand("builtin", "evaluate a shipped scenario");
    builtin_cmd->add_option("name", builtin_name, "builtin scenario name (see list-builtins)")
        ->required();
    add_common(builtin_cmd, opt, /*with_outputs=*/true);

    CLI::App* list_cmd = app.add_subcommand("list-builtins", "print shipped scenario names");

    CLI::App* check_cmd = app.add_subcommand("check", "run the round-trip and cross-inversion self-tests");
    add_common(check_cmd, opt, /*with_outputs=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems are configuration errors
    }

    try {
        if (list_cmd->parsed()) {
            for (const std::string& name : leakywell::builtin_names()) std::cout << name << "\n";
            return 0;
        }
        if (check_cmd->parsed()) return cmd_check(opt);
        if (run_cmd->parsed()) return execute_scenario(leakywell::load_scenario(config_path), opt, false);
        if (builtin_cmd->parsed())
            return execute_scenario(leakywell::builtin_scenario(builtin_name), opt, true);
    } catch (const leakywell::scenario_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const leakywell::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const leakywell::io_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;  // unreachable with require_subcommand(1)
}
