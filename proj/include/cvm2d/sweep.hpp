#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cvm2d/analytic.hpp"
#include "cvm2d/config_vars.hpp"
#include "cvm2d/divergence.hpp"
#include "cvm2d/lattice.hpp"
#include "cvm2d/minimizer.hpp"

namespace cvm2d {

struct SweepSpec {
    double h_lo = 1.0;
    double h_hi = 2.0;
    double step = 0.05;
    double eps0 = 0.0;  // clamped to 0 with a report warning when nonzero
    MinimizeConfig minimize_cfg{.max_flips = 100, .trials = 4, .seed = 1, .record_trace = false};
    DivergenceOptions divergence{};
};

struct SweepRow {
    double h = 0;
    double divergence = 0;  // D(initial || minimized) at this h
    double f_final = 0;
    std::uint64_t seed = 0;  // seed of the winning trial
    ConfigVars vars;         // minimized model variables
    std::optional<InterpretationTriple> analytic_ref;  // equilibrium triple, when physical

    bool operator==(const SweepRow&) const = default;
};

struct SweepReport {
    ConfigVars initial_vars;
    std::vector<SweepRow> rows;
    std::size_t best_index = 0;  // argmin |divergence|, ties toward smaller h
    std::vector<std::string> warnings;

    const SweepRow& best() const { return rows.at(best_index); }

    bool operator==(const SweepReport&) const = default;
};

// The h values h_lo, h_lo + step, ... up to h_hi (inclusive within rounding
// slack). Requires step > 0 and a non-empty grid.
std::vector<double> h_grid(double h_lo, double h_hi, double step);

// For each h on the grid, minimize a fresh copy of the input lattice at
// (eps0 = 0, eps1 = ln(h)/2) and compute the configuration-variable
// divergence of the input (q) against the minimized model (p). Deterministic
// given (lat, spec). Requires 0.1716 < h_lo <= h_hi < 3.
SweepReport run_sweep(const Lattice& lat, const SweepSpec& spec);

}  // namespace cvm2d
