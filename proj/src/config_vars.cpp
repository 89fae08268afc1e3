#include "cvm2d/config_vars.hpp"

#include <cmath>
#include <cstdlib>

namespace cvm2d {

std::array<std::int64_t, 14> ConfigCounts::numerators() const {
    const std::int64_t rc = static_cast<std::int64_t>(rows) * cols;
    return {
        4 * n_a, 4 * (rc - n_a),              // x1 = n_a/RC, x2
        2 * nn_aa, nn_mixed, 2 * nn_bb,       // y over 2RC pairs, y2 pre-degeneracy
        4 * nnn_aa, 2 * nnn_mixed, 4 * nnn_bb,  // w over RC pairs, w2 pre-degeneracy
        2 * t_aaa, t_aab_baa, 2 * t_aba,      // z over 2RC triplets, z2/z5 pre-degeneracy
        2 * t_bab, t_bba_abb, 2 * t_bbb,
    };
}

ConfigCounts count_configuration(const Lattice& lat) {
    ConfigCounts k;
    k.rows = lat.rows();
    k.cols = lat.cols();

    // Triplet counter index by (left, apex, right) bits; mixed orientations
    // share a slot and are halved later by the common-denominator layout.
    std::int64_t t[8] = {};
    const int R = lat.rows(), C = lat.cols();
    for (int r = 0; r < R; ++r) {
        const int below = wrap(r + 1, R);
        const int above = wrap(r - 1, R);
        const int off = (r % 2 == 0) ? 0 : -1;
        for (int c = 0; c < C; ++c) {
            const int s = static_cast<int>(lat.at(r, c));
            k.n_a += s;

            const int d1 = static_cast<int>(lat.at(below, wrap(c + off, C)));
            const int d2 = static_cast<int>(lat.at(below, wrap(c + off + 1, C)));
            k.nn_aa += (s & d1) + (s & d2);
            k.nn_bb += (1 - (s | d1)) + (1 - (s | d2));

            const int right = static_cast<int>(lat.at(r, wrap(c + 1, C)));
            k.nnn_aa += s & right;
            k.nnn_bb += 1 - (s | right);

            const int ac = wrap(apex_col(r, c), C);
            ++t[(s << 2) | (static_cast<int>(lat.at(below, ac)) << 1) | right];
            ++t[(s << 2) | (static_cast<int>(lat.at(above, ac)) << 1) | right];
        }
    }
    const std::int64_t rc = static_cast<std::int64_t>(R) * C;
    k.nn_mixed = 2 * rc - k.nn_aa - k.nn_bb;
    k.nnn_mixed = rc - k.nnn_aa - k.nnn_bb;
    k.t_bbb = t[0b000];
    k.t_bba_abb = t[0b001] + t[0b100];
    k.t_bab = t[0b010];
    k.t_aab_baa = t[0b011] + t[0b110];
    k.t_aba = t[0b101];
    k.t_aaa = t[0b111];
    return k;
}

ConfigVars to_config_vars(const ConfigCounts& counts) {
    const auto n = counts.numerators();
    const double d = static_cast<double>(counts.denom());
    ConfigVars cv;
    cv.x1 = n[0] / d;
    cv.x2 = n[1] / d;
    cv.y1 = n[2] / d;
    cv.y2 = n[3] / d;
    cv.y3 = n[4] / d;
    cv.w1 = n[5] / d;
    cv.w2 = n[6] / d;
    cv.w3 = n[7] / d;
    cv.z1 = n[8] / d;
    cv.z2 = n[9] / d;
    cv.z3 = n[10] / d;
    cv.z4 = n[11] / d;
    cv.z5 = n[12] / d;
    cv.z6 = n[13] / d;
    return cv;
}

ConfigVars count_config_vars(const Lattice& lat) {
    return to_config_vars(count_configuration(lat));
}

namespace {

template <typename V>
void add_checks(EquivalenceReport& rep, const std::array<V, 14>& n, V one, double tol) {
    // Field order: 0 x1, 1 x2, 2 y1, 3 y2, 4 y3, 5 w1, 6 w2, 7 w3, 8..13 z1..z6.
    const auto add = [&](std::string name, V lhs, V rhs) {
        const double residual = static_cast<double>(lhs) - static_cast<double>(rhs);
        rep.checks.push_back({std::move(name), static_cast<double>(lhs),
                              static_cast<double>(rhs), residual,
                              std::abs(residual) <= tol});
    };
    add("y1 = z1+z2", n[2], n[8] + n[9]);
    add("y2 = z2+z4", n[3], n[9] + n[11]);
    add("y2 = z3+z5", n[3], n[10] + n[12]);
    add("y3 = z5+z6", n[4], n[12] + n[13]);
    add("w1 = z1+z3", n[5], n[8] + n[10]);
    add("w2 = z2+z5", n[6], n[9] + n[12]);
    add("w3 = z4+z6", n[7], n[11] + n[13]);
    add("x1 = y1+y2", n[0], n[2] + n[3]);
    add("x1 = w1+w2", n[0], n[5] + n[6]);
    add("x1 = z1+z2+z3+z5", n[0], n[8] + n[9] + n[10] + n[12]);
    add("x2 = y2+y3", n[1], n[3] + n[4]);
    add("x2 = w2+w3", n[1], n[6] + n[7]);
    add("x2 = z2+z4+z5+z6", n[1], n[9] + n[11] + n[12] + n[13]);
    add("x1+x2 = 1", n[0] + n[1], one);
    add("y1+2y2+y3 = 1", n[2] + 2 * n[3] + n[4], one);
    add("w1+2w2+w3 = 1", n[5] + 2 * n[6] + n[7], one);
    add("z1+2z2+z3+z4+2z5+z6 = 1", n[8] + 2 * n[9] + n[10] + n[11] + 2 * n[12] + n[13], one);

    rep.all_pass = true;
    rep.max_abs_residual = 0;
    for (const auto& c : rep.checks) {
        rep.all_pass = rep.all_pass && c.pass;
        rep.max_abs_residual = std::max(rep.max_abs_residual, std::abs(c.residual));
    }
}

}  // namespace

EquivalenceReport check_equivalences(const ConfigCounts& counts) {
    EquivalenceReport rep;
    add_checks<std::int64_t>(rep, counts.numerators(), counts.denom(), 0.0);
    return rep;
}

EquivalenceReport check_equivalences(const ConfigVars& cv, double tol) {
    EquivalenceReport rep;
    const std::array<double, 14> n = {cv.x1, cv.x2, cv.y1, cv.y2, cv.y3,
                                      cv.w1, cv.w2, cv.w3, cv.z1, cv.z2,
                                      cv.z3, cv.z4, cv.z5, cv.z6};
    add_checks<double>(rep, n, 1.0, tol);
    return rep;
}

}  // namespace cvm2d
