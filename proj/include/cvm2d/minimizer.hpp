#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cvm2d/config_vars.hpp"
#include "cvm2d/lattice.hpp"
#include "cvm2d/thermo.hpp"

namespace cvm2d {

struct MinimizeConfig {
    int max_flips = 100;       // candidate swaps attempted per trial
    int trials = 1;            // independent restarts (seed, seed+1, ...)
    std::uint64_t seed = 1;
    bool record_trace = false; // keep per-step records in the trace
};

struct TraceStep {
    int index = 0;
    Cell a_cell, b_cell;  // cells drawn (A-state first), before the swap
    double f_before = 0, f_after = 0;
    bool accepted = false;
};

struct MinimizeTrace {
    std::uint64_t seed = 0;
    std::string rng_algorithm;
    double f_initial = 0, f_final = 0;
    int attempted_count = 0, accepted_count = 0;
    std::vector<TraceStep> steps;  // populated when record_trace is set
};

struct MinimizeResult {
    Lattice lattice;
    ConfigVars vars;
    MinimizeTrace trace;
};

// Stochastic pair-flip descent at fixed parameters: max_flips times, draw one
// random A-cell and one random B-cell (each uniform), swap their states, and
// keep the swap iff the free energy strictly decreased (full recount each
// step). x1 is conserved throughout; deterministic given (lat, p, cfg).
// Throws ValidationError when the lattice is constant (no swappable pair).
MinimizeResult minimize(const Lattice& lat, const EnthalpyParams& p, const MinimizeConfig& cfg);

// Runs cfg.trials independent minimize() calls with seeds cfg.seed,
// cfg.seed+1, ... from the same initial lattice and returns the trial with
// the lowest final free energy; ties break toward the lowest seed.
MinimizeResult best_of_trials(const Lattice& lat, const EnthalpyParams& p,
                              const MinimizeConfig& cfg);

}  // namespace cvm2d
