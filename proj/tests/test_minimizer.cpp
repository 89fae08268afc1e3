#include <doctest.h>

#include <cmath>

#include "cvm2d/config_vars.hpp"
#include "cvm2d/errors.hpp"
#include "cvm2d/lattice.hpp"
#include "cvm2d/minimizer.hpp"
#include "cvm2d/rng.hpp"
#include "cvm2d/thermo.hpp"

using namespace cvm2d;

namespace {

Lattice almost_uniform(int rows, int cols) {
    Lattice lat(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) lat.set(r, c, NodeState::A);
    lat.set(1, 1, NodeState::B);
    return lat;
}

}  // namespace

TEST_SUITE_BEGIN("minimizer");

TEST_CASE("rng produces deterministic bounded draws") {
    Rng a(7), b(7), c(8);
    bool all_equal = true, any_diff = false;
    for (int i = 0; i < 64; ++i) {
        std::uint64_t va = a.bounded(10);
        CHECK(va < 10);
        all_equal = all_equal && (va == b.bounded(10));
        any_diff = any_diff || (va != c.bounded(10));
    }
    CHECK(all_equal);
    CHECK(any_diff);
    CHECK(Rng::algorithm == "mt19937_64/rejection");
}

TEST_CASE("no move is accepted when every swap is free-energy neutral") {
    // A single B on a torus: any swap is a translation of the same pattern,
    // so the free energy never strictly decreases.
    Lattice lat = almost_uniform(4, 4);
    MinimizeResult res = minimize(lat, {0.0, 0.0}, {.max_flips = 50, .seed = 9});
    CHECK(res.trace.attempted_count == 50);
    CHECK(res.trace.accepted_count == 0);
    CHECK(res.trace.f_final == res.trace.f_initial);
    CHECK(res.lattice == lat);
}

TEST_CASE("stripe free energy strictly decreases at strong coupling") {
    Lattice lat = stripe_lattice(8, 8);
    EnthalpyParams p{0.0, eps1_from_h(1.65)};
    MinimizeResult res = minimize(lat, p, {.max_flips = 200, .seed = 3});
    CHECK(res.trace.accepted_count > 0);
    CHECK(res.trace.f_final < res.trace.f_initial);
    CHECK(res.trace.f_initial == doctest::Approx(free_energy(count_config_vars(lat), p)));
    CHECK(res.trace.f_final == doctest::Approx(free_energy(res.vars, p)));
    CHECK(res.vars == count_config_vars(res.lattice));
}

TEST_CASE("swaps conserve the A count") {
    Lattice lat = random_equiprobable(8, 8, 5);
    MinimizeResult res = minimize(lat, {0.0, eps1_from_h(1.4)}, {.max_flips = 150, .seed = 2});
    CHECK(res.lattice.count_a() == lat.count_a());
}

TEST_CASE("minimization is deterministic in the seed") {
    Lattice lat = random_equiprobable(8, 8, 12);
    EnthalpyParams p{0.0, eps1_from_h(1.5)};
    MinimizeConfig cfg{.max_flips = 100, .seed = 4, .record_trace = true};
    MinimizeResult r1 = minimize(lat, p, cfg);
    MinimizeResult r2 = minimize(lat, p, cfg);
    CHECK(r1.lattice == r2.lattice);
    CHECK(r1.trace.f_final == r2.trace.f_final);
    CHECK(r1.trace.accepted_count == r2.trace.accepted_count);

    cfg.seed = 5;
    MinimizeResult r3 = minimize(lat, p, cfg);
    bool same_draws = r1.trace.steps.size() == r3.trace.steps.size();
    for (std::size_t i = 0; same_draws && i < r1.trace.steps.size(); ++i) {
        const TraceStep &s1 = r1.trace.steps[i], &s3 = r3.trace.steps[i];
        same_draws = s1.a_cell.r == s3.a_cell.r && s1.a_cell.c == s3.a_cell.c &&
                     s1.b_cell.r == s3.b_cell.r && s1.b_cell.c == s3.b_cell.c;
    }
    CHECK_FALSE(same_draws);
}

TEST_CASE("trace bookkeeping is internally consistent") {
    Lattice lat = random_equiprobable(8, 8, 31);
    EnthalpyParams p{0.0, eps1_from_h(1.65)};
    MinimizeResult res = minimize(lat, p, {.max_flips = 120, .seed = 6, .record_trace = true});
    const MinimizeTrace& t = res.trace;
    CHECK(t.seed == 6);
    CHECK(t.rng_algorithm == "mt19937_64/rejection");
    REQUIRE(t.steps.size() == static_cast<std::size_t>(t.attempted_count));

    int accepted = 0;
    double f_current = t.f_initial;
    for (const TraceStep& s : t.steps) {
        CHECK(s.f_before == f_current);
        if (s.accepted) {
            CHECK(s.f_after < s.f_before);
            f_current = s.f_after;
            accepted++;
        } else {
            CHECK(s.f_after >= s.f_before);
        }
        const Cell& a = s.a_cell;
        const Cell& b = s.b_cell;
        CHECK(a.r >= 0);
        CHECK(a.r < 8);
        CHECK(b.c >= 0);
        CHECK(b.c < 8);
    }
    CHECK(accepted == t.accepted_count);
    CHECK(f_current == t.f_final);
}

TEST_CASE("steps are not recorded unless asked for") {
    Lattice lat = random_equiprobable(4, 4, 1);
    MinimizeResult res = minimize(lat, {0.0, 0.1}, {.max_flips = 30, .seed = 1});
    CHECK(res.trace.steps.empty());
    CHECK(res.trace.attempted_count == 30);
}

TEST_CASE("a uniform offset in the point coupling changes F but not the path") {
    // x1 is conserved, so the eps0 term is constant and cannot affect accepts.
    Lattice lat = random_equiprobable(8, 8, 17);
    MinimizeConfig cfg{.max_flips = 100, .seed = 8};
    MinimizeResult base = minimize(lat, {0.0, eps1_from_h(1.5)}, cfg);
    MinimizeResult lifted = minimize(lat, {0.7, eps1_from_h(1.5)}, cfg);
    CHECK(base.lattice == lifted.lattice);
    CHECK(lifted.trace.f_final ==
          doctest::Approx(base.trace.f_final + 0.7 * 0.5).epsilon(1e-12));
}

TEST_CASE("best_of_trials picks the lowest final free energy") {
    Lattice lat = random_equiprobable(8, 8, 23);
    EnthalpyParams p{0.0, eps1_from_h(1.65)};
    MinimizeConfig cfg{.max_flips = 80, .trials = 4, .seed = 10};
    MinimizeResult best = best_of_trials(lat, p, cfg);

    double min_f = 1e300;
    std::uint64_t min_seed = 0;
    for (std::uint64_t s = 10; s < 14; ++s) {
        MinimizeConfig one{.max_flips = 80, .trials = 1, .seed = s};
        double f = minimize(lat, p, one).trace.f_final;
        if (f < min_f) { min_f = f; min_seed = s; }
    }
    CHECK(best.trace.f_final == min_f);
    CHECK(best.trace.seed == min_seed);
}

TEST_CASE("tied trials resolve to the lowest seed") {
    // Every trial rejects every move here, so all finals tie at F(initial).
    Lattice lat = almost_uniform(4, 4);
    MinimizeResult best = best_of_trials(lat, {0.0, 0.0}, {.max_flips = 20, .trials = 3, .seed = 40});
    CHECK(best.trace.seed == 40);
    CHECK(best.trace.accepted_count == 0);
}

TEST_CASE("constant lattices cannot be minimized") {
    Lattice lat(4, 4);  // all B
    CHECK_THROWS_AS(minimize(lat, {0.0, 0.1}, {}), ValidationError);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) lat.set(r, c, NodeState::A);
    CHECK_THROWS_AS(minimize(lat, {0.0, 0.1}, {}), ValidationError);
}

TEST_SUITE_END();
