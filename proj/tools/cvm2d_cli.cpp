// Command-line front end for the 2-D CVM library: configuration-variable
// counting, the closed-form equilibrium curves, pair-flip free-energy
// minimization, divergence evaluation, h-sweeps, mirror envelopes, and test
// fixture generation.
//
// stdout carries only data; diagnostics go to stderr. Exit codes: 0 success,
// 2 usage error, 3 input/validation error, 4 numeric-domain error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cvm2d/analytic.hpp"
#include "cvm2d/config_vars.hpp"
#include "cvm2d/divergence.hpp"
#include "cvm2d/errors.hpp"
#include "cvm2d/lattice.hpp"
#include "cvm2d/minimizer.hpp"
#include "cvm2d/report_io.hpp"
#include "cvm2d/sweep.hpp"
#include "cvm2d/thermo.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cvm2d::ValidationError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw cvm2d::ValidationError("cannot write file: " + path);
    out << content;
}

void emit(const std::optional<std::string>& out_path, const std::string& content) {
    if (out_path)
        write_file(*out_path, content);
    else
        std::cout << content;
}

cvm2d::Lattice load_pattern(const std::string& path) {
    cvm2d::Lattice lat = cvm2d::parse_pattern(read_file(path));
    if (lat.rows() == 2)
        std::cerr << "warning: " << path << " has only 2 rows; vertical wrap makes the upper "
                  << "and lower diagonal neighbors coincide\n";
    return lat;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// A ConfigVars source for the divergence command: a pattern file, or a JSON
// file (object with keys x1..z6, or one holding such an object under "vars").
cvm2d::ConfigVars load_vars(const std::string& path) {
    const std::string text = read_file(path);
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
        try {
            json j = json::parse(text);
            if (j.contains("vars")) j = j.at("vars");
            return j.get<cvm2d::ConfigVars>();
        } catch (const json::exception& e) {
            throw cvm2d::ValidationError(path + ": invalid ConfigVars JSON: " + e.what());
        }
    }
    return cvm2d::count_config_vars(cvm2d::parse_pattern(text));
}

int run(int argc, char** argv) {
    CLI::App app{"2-D cluster-variation-method toolkit: pattern statistics, closed-form "
                 "equilibrium, free-energy minimization, divergence sweeps"};
    app.require_subcommand(1);

    // ---- count ----------------------------------------------------------
    std::string count_pattern;
    auto* cmd_count = app.add_subcommand(
        "count", "Count configuration variables of a pattern file; prints JSON with the "
                 "variables, the equivalence-relation report, and an x1 = 0.5 flag");
    cmd_count->add_option("pattern", count_pattern, "pattern file (lines of 0/1)")->required();

    // ---- analytic -------------------------------------------------------
    double an_lo = 1.0, an_hi = 1.0, an_step = 0.05;
    auto* cmd_analytic = app.add_subcommand(
        "analytic", "Sample the closed-form equilibrium variables over an h range as CSV");
    cmd_analytic->add_option("--h-lo", an_lo, "range start")->required();
    cmd_analytic->add_option("--h-hi", an_hi, "range end")->required();
    cmd_analytic->add_option("--step", an_step, "grid step")->capture_default_str();

    // ---- minimize -------------------------------------------------------
    std::string min_pattern;
    double min_h = 0;
    int min_flips = 100, min_trials = 1;
    std::uint64_t min_seed = 1;
    std::optional<std::string> min_out_pattern, min_trace;
    auto* cmd_minimize = app.add_subcommand(
        "minimize", "Pair-flip descent at fixed h; prints a JSON summary with the final "
                    "configuration variables");
    // long-only help here so that --h stays available
    cmd_minimize->set_help_flag("--help", "print help and exit");
    cmd_minimize->add_option("--pattern", min_pattern, "input pattern file")->required();
    cmd_minimize->add_option("--h", min_h, "interaction parameter h = exp(2*eps1)")->required();
    cmd_minimize->add_option("--flips", min_flips, "candidate swaps per trial")->capture_default_str();
    cmd_minimize->add_option("--trials", min_trials, "independent restarts")->capture_default_str();
    cmd_minimize->add_option("--seed", min_seed, "RNG seed of the first trial")->capture_default_str();
    cmd_minimize->add_option("--out-pattern", min_out_pattern, "write the final pattern here");
    cmd_minimize->add_option("--trace", min_trace,
                             "write a step,accepted,F_before,F_after CSV here");

    // ---- sweep ----------------------------------------------------------
    std::string sweep_pattern;
    double sw_lo = 0, sw_hi = 0, sw_step = 0.05, sw_margin = 0.15;
    int sw_trials = 4, sw_flips = 100;
    std::uint64_t sw_seed = 1;
    std::optional<std::string> sw_out;
    std::string sw_format = "csv";
    bool sw_auto = false;
    auto* cmd_sweep = app.add_subcommand(
        "sweep", "Minimize at each h on a grid and report the divergence-vs-h table with the "
                 "best-fit h");
    cmd_sweep->add_option("--pattern", sweep_pattern, "input pattern file")->required();
    auto* opt_lo = cmd_sweep->add_option("--h-lo", sw_lo, "range start");
    auto* opt_hi = cmd_sweep->add_option("--h-hi", sw_hi, "range end");
    cmd_sweep->add_option("--step", sw_step, "grid step")->capture_default_str();
    cmd_sweep->add_option("--trials", sw_trials, "minimizer restarts per h")->capture_default_str();
    cmd_sweep->add_option("--seed", sw_seed, "base RNG seed")->capture_default_str();
    cmd_sweep->add_option("--flips", sw_flips, "candidate swaps per trial")->capture_default_str();
    cmd_sweep->add_option("--out", sw_out, "write the report here (.csv or .json)");
    cmd_sweep->add_option("--format", sw_format, "stdout format when --out is absent")->capture_default_str()
        ->check(CLI::IsMember({"csv", "json"}));
    auto* opt_auto = cmd_sweep->add_flag("--auto-range", sw_auto,
                                         "derive the h range from the pattern's statistics");
    cmd_sweep->add_option("--margin", sw_margin, "auto-range widening margin")->capture_default_str();
    opt_auto->excludes(opt_lo)->excludes(opt_hi);

    // ---- envelope -------------------------------------------------------
    std::string env_pattern;
    std::optional<std::string> env_out;
    auto* cmd_envelope = app.add_subcommand(
        "envelope", "Mirror-envelope a core pattern to twice its size in each direction");
    cmd_envelope->add_option("--pattern", env_pattern, "core pattern file")->required();
    cmd_envelope->add_option("--out", env_out, "write the envelope pattern here");

    // ---- divergence -----------------------------------------------------
    std::string div_q, div_p;
    double div_floor = 1e-9;
    bool div_strict = false;
    auto* cmd_divergence = app.add_subcommand(
        "divergence", "Configuration-variable divergence D(q||p); inputs are pattern files or "
                      "ConfigVars JSON files");
    cmd_divergence->add_option("--q", div_q, "representation side")->required();
    cmd_divergence->add_option("--p", div_p, "model side")->required();
    cmd_divergence->add_option("--floor", div_floor, "epsilon floor for zero model entries")
        ->capture_default_str();
    cmd_divergence->add_flag("--strict", div_strict, "error on zero model entries instead");

    // ---- gen-fixture ----------------------------------------------------
    std::string gen_kind;
    int gen_rows = 16, gen_cols = 16;
    std::uint64_t gen_seed = 1;
    std::optional<std::string> gen_out;
    auto* cmd_gen = app.add_subcommand("gen-fixture",
                                       "Generate a stripe, block, or random test pattern");
    cmd_gen->add_option("--kind", gen_kind, "stripe | block | random")
        ->required()
        ->check(CLI::IsMember({"stripe", "block", "random"}));
    cmd_gen->add_option("--rows", gen_rows, "row count (even)")->capture_default_str();
    cmd_gen->add_option("--cols", gen_cols, "column count")->capture_default_str();
    cmd_gen->add_option("--seed", gen_seed, "seed for kind=random")->capture_default_str();
    cmd_gen->add_option("--out", gen_out, "write the pattern here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (cmd_count->parsed()) {
        const cvm2d::Lattice lat = load_pattern(count_pattern);
        const cvm2d::ConfigCounts counts = cvm2d::count_configuration(lat);
        json j;
        j["vars"] = cvm2d::to_config_vars(counts);
        j["equivalences"] = cvm2d::check_equivalences(counts);
        j["x1_is_half"] = 2 * counts.n_a == static_cast<std::int64_t>(lat.rows()) * lat.cols();
        std::cout << j.dump(2) << "\n";
    } else if (cmd_analytic->parsed()) {
        std::string out = "h,y1,y2,y3,w1,w2,w3,z1,z2,z3,z4,z5,z6\n";
        for (const double h : cvm2d::h_grid(an_lo, an_hi, an_step)) {
            const cvm2d::ConfigVars cv = cvm2d::analytic_config_vars(h);
            out += fmt(h);
            for (double v : {cv.y1, cv.y2, cv.y3, cv.w1, cv.w2, cv.w3, cv.z1, cv.z2, cv.z3,
                             cv.z4, cv.z5, cv.z6})
                out += "," + fmt(v);
            out += "\n";
        }
        std::cout << out;
    } else if (cmd_minimize->parsed()) {
        const cvm2d::Lattice lat = load_pattern(min_pattern);
        const cvm2d::EnthalpyParams params{0.0, cvm2d::eps1_from_h(min_h)};
        const cvm2d::MinimizeConfig cfg{min_flips, min_trials, min_seed,
                                        min_trace.has_value()};
        const cvm2d::MinimizeResult result = cvm2d::best_of_trials(lat, params, cfg);
        if (min_out_pattern) write_file(*min_out_pattern, cvm2d::serialize_pattern(result.lattice));
        if (min_trace) {
            std::string csv = "step,accepted,F_before,F_after\n";
            for (const auto& s : result.trace.steps)
                csv += std::to_string(s.index) + "," + (s.accepted ? "1" : "0") + "," +
                       fmt(s.f_before) + "," + fmt(s.f_after) + "\n";
            write_file(*min_trace, csv);
        }
        json j;
        j["h"] = min_h;
        j["seed"] = result.trace.seed;
        j["rng"] = result.trace.rng_algorithm;
        j["f_initial"] = result.trace.f_initial;
        j["f_final"] = result.trace.f_final;
        j["attempted"] = result.trace.attempted_count;
        j["accepted"] = result.trace.accepted_count;
        j["vars"] = result.vars;
        std::cout << j.dump(2) << "\n";
    } else if (cmd_sweep->parsed()) {
        const cvm2d::Lattice lat = load_pattern(sweep_pattern);
        cvm2d::SweepSpec spec;
        if (sw_auto) {
            const cvm2d::HRangeEstimate est =
                cvm2d::estimate_h_range(cvm2d::count_config_vars(lat), {sw_margin});
            for (const auto& note : est.notes) std::cerr << "auto-range: " << note << "\n";
            std::cerr << "auto-range: sweeping h in [" << est.lo << ", " << est.hi << "]\n";
            spec.h_lo = est.lo;
            spec.h_hi = est.hi;
        } else {
            if (opt_lo->count() == 0 || opt_hi->count() == 0)
                throw cvm2d::ValidationError(
                    "sweep needs either --auto-range or both --h-lo and --h-hi");
            spec.h_lo = sw_lo;
            spec.h_hi = sw_hi;
        }
        spec.step = sw_step;
        spec.minimize_cfg = {sw_flips, sw_trials, sw_seed, false};

        cvm2d::ReportFormat format = cvm2d::report_format_from_name(sw_format);
        if (sw_out) {
            const auto dot = sw_out->rfind('.');
            if (dot == std::string::npos)
                throw cvm2d::ValidationError("--out needs a .csv or .json extension: " + *sw_out);
            format = cvm2d::report_format_from_name(sw_out->substr(dot + 1));
        }

        const cvm2d::SweepReport report = cvm2d::run_sweep(lat, spec);
        for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
        emit(sw_out, cvm2d::emit_report(report, format));
    } else if (cmd_envelope->parsed()) {
        const cvm2d::Lattice core = load_pattern(env_pattern);
        emit(env_out, cvm2d::serialize_pattern(cvm2d::build_envelope(core)));
    } else if (cmd_divergence->parsed()) {
        cvm2d::DivergenceOptions options;
        options.zero_handling =
            div_strict ? cvm2d::ZeroHandling::strict_error : cvm2d::ZeroHandling::epsilon_floor;
        options.eps_floor = div_floor;
        std::cout << fmt(cvm2d::cvm_divergence(load_vars(div_q), load_vars(div_p), options))
                  << "\n";
    } else if (cmd_gen->parsed()) {
        cvm2d::Lattice lat(2, 2);
        if (gen_kind == "stripe")
            lat = cvm2d::stripe_lattice(gen_rows, gen_cols);
        else if (gen_kind == "block")
            lat = cvm2d::block_lattice(gen_rows, gen_cols);
        else
            lat = cvm2d::random_equiprobable(gen_rows, gen_cols, gen_seed);
        emit(gen_out, cvm2d::serialize_pattern(lat));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const cvm2d::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cvm2d::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
