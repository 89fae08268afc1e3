#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cvm2d/lattice.hpp"

namespace cvm2d {

// The fourteen configuration-variable fractions. Mixed-orientation entries
// (y2, w2, z2, z5) are stored pre-degeneracy: the raw two-orientation count
// divided by 2. Degeneracy weights beta = (1,2,1) and gamma = (1,2,1,1,2,1)
// reappear in the normalizations y1 + 2*y2 + y3 = 1, w1 + 2*w2 + w3 = 1,
// z1 + 2*z2 + z3 + z4 + 2*z5 + z6 = 1.
struct ConfigVars {
    double x1 = 0, x2 = 0;
    double y1 = 0, y2 = 0, y3 = 0;
    double w1 = 0, w2 = 0, w3 = 0;
    double z1 = 0, z2 = 0, z3 = 0, z4 = 0, z5 = 0, z6 = 0;

    bool operator==(const ConfigVars&) const = default;
};

inline constexpr std::array<double, 3> kBeta = {1.0, 2.0, 1.0};
inline constexpr std::array<double, 6> kGamma = {1.0, 2.0, 1.0, 1.0, 2.0, 1.0};

// Raw tuple counts from one pass over the lattice. All fourteen fractions are
// integers over the common denominator 4*rows*cols, which makes every
// equivalence relation an exact integer identity.
struct ConfigCounts {
    int rows = 0, cols = 0;
    std::int64_t n_a = 0;                                  // A cells (of rows*cols)
    std::int64_t nn_aa = 0, nn_mixed = 0, nn_bb = 0;       // of 2*rows*cols diagonal pairs
    std::int64_t nnn_aa = 0, nnn_mixed = 0, nnn_bb = 0;    // of rows*cols horizontal pairs
    std::int64_t t_aaa = 0, t_aab_baa = 0, t_aba = 0;      // of 2*rows*cols triplets
    std::int64_t t_bab = 0, t_bba_abb = 0, t_bbb = 0;

    std::int64_t denom() const { return static_cast<std::int64_t>(4) * rows * cols; }

    // Numerators of each fraction over denom(), in the ConfigVars field order
    // x1, x2, y1, y2, y3, w1, w2, w3, z1..z6.
    std::array<std::int64_t, 14> numerators() const;

    bool operator==(const ConfigCounts&) const = default;
};

ConfigCounts count_configuration(const Lattice& lat);
ConfigVars to_config_vars(const ConfigCounts& counts);
ConfigVars count_config_vars(const Lattice& lat);

struct EquivalenceCheck {
    std::string name;
    double lhs = 0, rhs = 0;
    double residual = 0;  // lhs - rhs
    bool pass = false;
};

struct EquivalenceReport {
    std::vector<EquivalenceCheck> checks;
    bool all_pass = false;
    double max_abs_residual = 0;
};

// Exact integer verification of the pair/triplet equivalence relations and
// normalizations; every residual must be identically zero for counts taken
// from a torus.
EquivalenceReport check_equivalences(const ConfigCounts& counts);

// Floating-point verification for analytically generated variables.
EquivalenceReport check_equivalences(const ConfigVars& cv, double tol);

}  // namespace cvm2d
