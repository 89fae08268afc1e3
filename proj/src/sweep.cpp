#include "cvm2d/sweep.hpp"

#include <cmath>
#include <sstream>

#include "cvm2d/errors.hpp"
#include "cvm2d/thermo.hpp"

namespace cvm2d {

std::vector<double> h_grid(double h_lo, double h_hi, double step) {
    if (!(step > 0.0)) throw ValidationError("step must be positive, got " + std::to_string(step));
    if (h_lo > h_hi) {
        std::ostringstream msg;
        msg << "empty h grid: h_lo = " << h_lo << " exceeds h_hi = " << h_hi;
        throw ValidationError(msg.str());
    }
    // Index-based generation keeps the grid exact up to one rounding slack.
    const auto n = static_cast<std::size_t>(std::floor((h_hi - h_lo) / step + 1e-9)) + 1;
    std::vector<double> grid;
    grid.reserve(n);
    for (std::size_t k = 0; k < n; ++k) grid.push_back(h_lo + static_cast<double>(k) * step);
    return grid;
}

SweepReport run_sweep(const Lattice& lat, const SweepSpec& spec) {
    if (!(spec.h_lo > kDeltaRootLow) || !(spec.h_hi < 3.0)) {
        std::ostringstream msg;
        msg << "sweep range [" << spec.h_lo << ", " << spec.h_hi
            << "] must lie inside the physical branch (" << kDeltaRootLow << ", 3)";
        throw ValidationError(msg.str());
    }
    const std::vector<double> grid = h_grid(spec.h_lo, spec.h_hi, spec.step);

    SweepReport report;
    double eps0 = spec.eps0;
    if (eps0 != 0.0) {
        std::ostringstream msg;
        msg << "eps0 = " << eps0 << " clamped to 0: the divergence comparison is only "
            << "meaningful in the equiprobable regime";
        report.warnings.push_back(msg.str());
        eps0 = 0.0;
    }

    report.initial_vars = count_config_vars(lat);
    if (report.initial_vars.x1 != 0.5) {
        std::ostringstream msg;
        msg << "input pattern has x1 = " << report.initial_vars.x1
            << " (the regime under study assumes x1 = 0.5)";
        report.warnings.push_back(msg.str());
    }

    report.rows.reserve(grid.size());
    for (const double h : grid) {
        const EnthalpyParams params{eps0, eps1_from_h(h)};
        MinimizeResult result = best_of_trials(lat, params, spec.minimize_cfg);

        SweepRow row;
        row.h = h;
        row.divergence = cvm_divergence(report.initial_vars, result.vars, spec.divergence);
        row.f_final = result.trace.f_final;
        row.seed = result.trace.seed;
        row.vars = result.vars;
        try {
            row.analytic_ref = interpretation_triple(h);
        } catch (const DomainError&) {
            row.analytic_ref = std::nullopt;
        }
        report.rows.push_back(std::move(row));
    }

    report.best_index = 0;
    for (std::size_t i = 1; i < report.rows.size(); ++i)
        if (std::abs(report.rows[i].divergence) <
            std::abs(report.rows[report.best_index].divergence))
            report.best_index = i;
    return report;
}

}  // namespace cvm2d
