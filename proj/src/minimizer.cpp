#include "cvm2d/minimizer.hpp"

#include <string>

#include "cvm2d/errors.hpp"
#include "cvm2d/rng.hpp"

namespace cvm2d {

MinimizeResult minimize(const Lattice& lat, const EnthalpyParams& p, const MinimizeConfig& cfg) {
    if (cfg.max_flips < 1)
        throw ValidationError("max_flips must be >= 1, got " + std::to_string(cfg.max_flips));

    std::vector<Cell> a_cells, b_cells;
    for (int r = 0; r < lat.rows(); ++r)
        for (int c = 0; c < lat.cols(); ++c)
            (lat.at(r, c) == NodeState::A ? a_cells : b_cells).push_back({r, c});
    if (a_cells.empty() || b_cells.empty())
        throw ValidationError("cannot minimize a constant lattice: no opposite-state pair exists");

    MinimizeResult result{lat, count_config_vars(lat), {}};
    MinimizeTrace& trace = result.trace;
    trace.seed = cfg.seed;
    trace.rng_algorithm = std::string(Rng::algorithm);
    trace.f_initial = free_energy(result.vars, p);
    trace.f_final = trace.f_initial;
    if (cfg.record_trace) trace.steps.reserve(static_cast<std::size_t>(cfg.max_flips));

    Rng rng(cfg.seed);
    Lattice& work = result.lattice;
    double f_current = trace.f_initial;

    for (int step = 0; step < cfg.max_flips; ++step) {
        const std::size_t ia = rng.bounded(a_cells.size());
        const std::size_t ib = rng.bounded(b_cells.size());
        const Cell a = a_cells[ia];
        const Cell b = b_cells[ib];

        swap_states(work, a, b);
        const ConfigVars candidate = count_config_vars(work);
        const double f_candidate = free_energy(candidate, p);
        const bool accepted = f_candidate < f_current;

        if (accepted) {
            std::swap(a_cells[ia], b_cells[ib]);  // the two cells traded states
            result.vars = candidate;
            f_current = f_candidate;
            ++trace.accepted_count;
        } else {
            swap_states(work, a, b);  // revert
        }
        ++trace.attempted_count;
        if (cfg.record_trace)
            trace.steps.push_back({step, a, b, trace.f_final, f_candidate, accepted});
        trace.f_final = f_current;
    }
    return result;
}

MinimizeResult best_of_trials(const Lattice& lat, const EnthalpyParams& p,
                              const MinimizeConfig& cfg) {
    if (cfg.trials < 1)
        throw ValidationError("trials must be >= 1, got " + std::to_string(cfg.trials));

    MinimizeConfig trial_cfg = cfg;
    trial_cfg.trials = 1;

    MinimizeResult best = minimize(lat, p, trial_cfg);
    for (int t = 1; t < cfg.trials; ++t) {
        trial_cfg.seed = cfg.seed + static_cast<std::uint64_t>(t);
        MinimizeResult candidate = minimize(lat, p, trial_cfg);
        if (candidate.trace.f_final < best.trace.f_final) best = std::move(candidate);
    }
    return best;
}

}  // namespace cvm2d
