#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cvm2d/config_vars.hpp"

namespace cvm2d {

// Discriminant of the closed-form equilibrium: delta = -h^2 + 6h - 1, with
// roots 3 +- 2*sqrt(2) (~0.1716 and ~5.8284) where the solution diverges.
double delta(double h);

inline constexpr double kDeltaRootLow = 0.17157287525380990;   // 3 - 2*sqrt(2)
inline constexpr double kDeltaRootHigh = 5.82842712474619009;  // 3 + 2*sqrt(2)

// Closed-form equilibrium configuration variables at interaction parameter h
// in the equiprobable regime (x1 = x2 = 0.5, eps0 = 0):
//   y1 = y3 = (3h-1)/(2 delta)      y2 = h(3-h)/(2 delta)
//   w1 = w3 = (h+1)^2/(4 delta)     w2 = (3h-1)(3-h)/(4 delta)
//   z1 = z6 = (3h-1)(h+1)/(8 delta) z2 = z5 = (3h-1)(3-h)/(8 delta)
//   z3 = z4 = (3-h)(h+1)/(8 delta)
// Throws DomainError when delta <= 0 or any variable leaves [0,1] (h outside
// the physical branch, roughly h in (1/3, 3)).
ConfigVars analytic_config_vars(double h);

// The three interpretation variables summarizing a pattern's character.
struct InterpretationTriple {
    double y2 = 0;  // unlike-diagonal density (boundary fraction)
    double z3 = 0;  // A-around-B jaggedness
    double z1 = 0;  // solid-A interior mass
    bool operator==(const InterpretationTriple&) const = default;
};

InterpretationTriple interpretation_triple(double h);

struct HRangeOptions {
    double margin = 0.15;  // widening applied to the recovered (min, max)
};

// Result of inverting each interpretation-variable curve separately; a curve
// whose target value is unattainable on the search interval yields nullopt
// plus a note naming the variable.
struct HRangeEstimate {
    double lo = 0, hi = 0;
    std::optional<double> h_from_y2, h_from_z3, h_from_z1;
    std::vector<std::string> notes;
};

// Recover the h-range suggested by a counted pattern: bisection inversion of
// the monotone curves y2(h), z3(h) (decreasing) and z1(h) (increasing) on
// (kDeltaRootLow + delta, 3], then (min, max) of the recovered values widened
// by options.margin. Requires x1 = 0.5 within 1e-9; throws DomainError when
// no curve can be inverted.
HRangeEstimate estimate_h_range(const ConfigVars& cv, const HRangeOptions& options = {});

}  // namespace cvm2d
