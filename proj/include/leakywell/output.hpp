#pragma once

// Text emitters for scenario results: CSV (the canonical data product), a
// gnuplot script rendering the log-log type curves, and a plain-text
// convergence report.  All three are deterministic — fixed number formats,
// fixed row ordering, no timestamps — so repeated runs are byte-identical
// and diffable.

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "leakywell/scenario_run.hpp"

namespace leakywell {

class io_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

/// Scientific notation with 13 significant digits (value round-trips exactly
/// through text for the plot script's row-matching comparisons).
inline std::string fmt_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

/// Compact form for legends and report prose.
inline std::string fmt_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

inline std::string describe_curve(const CurveResult& c) {
    std::string s = "scenario " + c.scenario_id;
    if (c.variant_key != "none") s += "  " + c.variant_key + "=" + fmt_short(c.variant_value);
    s += "  obs r_D=" + fmt_short(c.obs.r_D) + " z_D=[" + fmt_short(c.obs.z_lo) + "," +
         fmt_short(c.obs.z_hi) + "] medium=" + c.obs.medium;
    if (c.obs.t_Bs > 0.0) s += " t_Bs=" + fmt_short(c.obs.t_Bs);
    return s;
}

}  // namespace detail

/// Writes one CSV row per evaluated point.  Column schema (header mandatory):
/// scenario_id,variant_key,variant_value,r_D,z_D_lo,z_D_hi,t_s,s_D,s_mD,flag,panels,terms
inline void emit_csv(const std::vector<CurveResult>& results, std::ostream& os) {
    if (results.empty()) throw scenario_error("emit_csv: results must be non-empty");
    os << "scenario_id,variant_key,variant_value,r_D,z_D_lo,z_D_hi,t_s,s_D,s_mD,flag,panels,terms\n";
    for (const CurveResult& c : results)
        for (const CurvePoint& p : c.points)
            os << c.scenario_id << ',' << c.variant_key << ',' << detail::fmt_sci(c.variant_value)
               << ',' << detail::fmt_sci(c.obs.r_D) << ',' << detail::fmt_sci(c.obs.z_lo) << ','
               << detail::fmt_sci(c.obs.z_hi) << ',' << detail::fmt_sci(p.t_s) << ','
               << detail::fmt_sci(p.s_D) << ',' << detail::fmt_sci(p.s_mD) << ',' << p.flag << ','
               << p.panels << ',' << p.terms << '\n';
}

inline void emit_csv(const std::vector<CurveResult>& results, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw io_error("emit_csv: cannot open for writing: " + path);
    emit_csv(results, os);
    os.flush();
    if (!os) throw io_error("emit_csv: write failed: " + path);
}

/// Writes a gnuplot script plotting log-log s_D (column 8) against t_s
/// (column 7), one plot per observation, one titled line per sweep variant.
/// Rows are selected by exact textual match of the variant/observation
/// columns (the script embeds the same %.12e literals the CSV emits, so the
/// comparison is exact after parsing).  csv_name defaults to
/// "<scenario_id>.csv"; any gnuplot terminal may be substituted for the
/// pngcairo default.
inline void emit_plot_script(const std::vector<CurveResult>& results, std::ostream& os,
                             std::string csv_name = "") {
    if (results.empty()) throw scenario_error("emit_plot_script: results must be non-empty");
    if (csv_name.empty()) csv_name = results.front().scenario_id + ".csv";
    const std::string base = results.front().scenario_id;

    os << "# gnuplot script: dimensionless type curves for scenario " << base << "\n";
    os << "# data file: " << csv_name << " (see README for the column schema)\n";
    os << "set datafile separator \",\"\n";
    os << "set logscale xy\n";
    os << "set xlabel \"t_s\"\n";
    os << "set ylabel \"s_D\"\n";
    os << "set grid\n";
    os << "set key left top\n";
    os << "set terminal pngcairo size 900,640\n";

    // Curves arrive observation-major; walk contiguous blocks of one observation.
    std::size_t block = 1;
    for (std::size_t i = 0; i < results.size();) {
        std::size_t j = i;
        while (j < results.size() && results[j].obs.r_D == results[i].obs.r_D &&
               results[j].obs.z_lo == results[i].obs.z_lo &&
               results[j].obs.z_hi == results[i].obs.z_hi &&
               results[j].obs.medium == results[i].obs.medium)
            ++j;
        const Observation& obs = results[i].obs;
        os << "\n# observation block " << block << ": " << obs.medium << " r_D=" << detail::fmt_short(obs.r_D);
        if (obs.z_lo == obs.z_hi)
            os << " z_D=" << detail::fmt_short(obs.z_lo) << "\n";
        else
            os << " z_D=[" << detail::fmt_short(obs.z_lo) << "," << detail::fmt_short(obs.z_hi) << "]\n";
        os << "set output \"" << base << "_obs" << block << ".png\"\n";
        os << "set title \"" << base << ": " << obs.medium << " r_D=" << detail::fmt_short(obs.r_D)
           << (obs.z_lo == obs.z_hi
                   ? " z_D=" + detail::fmt_short(obs.z_lo)
                   : " z_D=[" + detail::fmt_short(obs.z_lo) + "," + detail::fmt_short(obs.z_hi) + "]")
           << "\"\n";
        os << "plot \\\n";
        for (std::size_t k = i; k < j; ++k) {
            const CurveResult& c = results[k];
            // select rows of this curve: variant + observation columns must match
            std::string cond = "strcol(2) eq \"" + c.variant_key + "\" && strcol(3) eq \"" +
                               detail::fmt_sci(c.variant_value) + "\" && strcol(4) eq \"" +
                               detail::fmt_sci(c.obs.r_D) + "\" && strcol(5) eq \"" +
                               detail::fmt_sci(c.obs.z_lo) + "\" && strcol(6) eq \"" +
                               detail::fmt_sci(c.obs.z_hi) + "\"";
            const std::string title =
                c.variant_key == "none" ? "s_D" : c.variant_key + " = " + detail::fmt_short(c.variant_value);
            os << "  \"" << csv_name << "\" using ((" << cond << ") ? $7 : NaN):8 with lines title \""
               << title << "\"" << (k + 1 < j ? ", \\\n" : "\n");
        }
        i = j;
        ++block;
    }
}

inline void emit_plot_script(const std::vector<CurveResult>& results, const std::string& path,
                             const std::string& csv_name = "") {
    std::ofstream os(path);
    if (!os) throw io_error("emit_plot_script: cannot open for writing: " + path);
    emit_plot_script(results, os, csv_name);
    os.flush();
    if (!os) throw io_error("emit_plot_script: write failed: " + path);
}

/// Plain-text per-curve convergence summary: worst panel and series counts,
/// non-converged point tallies, and the de Hoog/Stehfest cross-check maximum
/// when it was computed.  Ends with an aggregate line.
inline std::string convergence_report(const std::vector<CurveResult>& results) {
    std::ostringstream os;
    os << "convergence report (" << results.size() << (results.size() == 1 ? " curve" : " curves")
       << ")\n";
    std::size_t total_points = 0, total_partial = 0, total_failed = 0;
    double worst_cross = -1.0;
    for (const CurveResult& c : results) {
        std::size_t partial = 0, failed = 0;
        int max_panels = 0, max_terms = 0;
        for (const CurvePoint& p : c.points) {
            if (p.flag == "failed") ++failed;
            else if (p.flag == "accelerated-partial") ++partial;
            max_panels = std::max(max_panels, p.panels);
            max_terms = std::max(max_terms, p.terms);
        }
        total_points += c.points.size();
        total_partial += partial;
        total_failed += failed;
        os << detail::describe_curve(c) << "\n";
        os << "  points=" << c.points.size() << "  converged=" << (c.points.size() - partial - failed)
           << "  accelerated-partial=" << partial << "  failed=" << failed << "  max_panels=" << max_panels
           << "  max_series_terms=" << max_terms;
        if (c.cross_check_max >= 0.0) {
            os << "  cross_check_max=" << detail::fmt_short(c.cross_check_max);
            worst_cross = std::max(worst_cross, c.cross_check_max);
        }
        os << "\n";
    }
    os << "totals: points=" << total_points << "  accelerated-partial=" << total_partial
       << "  failed=" << total_failed;
    if (worst_cross >= 0.0) os << "  cross_check_max=" << detail::fmt_short(worst_cross);
    os << "\n";
    os << (total_partial + total_failed == 0 ? "all points converged\n" : "non-converged points present\n");
    return os.str();
}

}  // namespace leakywell
