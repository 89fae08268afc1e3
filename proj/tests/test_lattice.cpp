#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "cvm2d/errors.hpp"
#include "cvm2d/lattice.hpp"
#include "cvm2d/rng.hpp"

using namespace cvm2d;

namespace {

using CellKey = std::pair<int, int>;

CellKey key(int r, int c) { return {r, c}; }

// Unordered two-cell key for duplicate detection.
std::pair<CellKey, CellKey> edge_key(CellKey a, CellKey b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

Lattice random_bits(int rows, int cols, std::uint64_t seed) {
    Rng rng(seed);
    Lattice lat(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            lat.set(r, c, rng.bounded(2) == 1 ? NodeState::A : NodeState::B);
    return lat;
}

}  // namespace

TEST_SUITE_BEGIN("lattice");

TEST_CASE("constructor validates shape") {
    CHECK_NOTHROW(Lattice(2, 2));
    CHECK_NOTHROW(Lattice(4, 6));
    CHECK_THROWS_AS(Lattice(3, 4), ValidationError);   // odd row count
    CHECK_THROWS_AS(Lattice(1, 8), ValidationError);
    CHECK_THROWS_AS(Lattice(0, 4), ValidationError);
    CHECK_THROWS_AS(Lattice(4, 1), ValidationError);   // fewer than 2 columns
    CHECK_THROWS_AS(Lattice(4, 0), ValidationError);
}

TEST_CASE("wrap handles negative and overflow indices") {
    CHECK(wrap(0, 4) == 0);
    CHECK(wrap(3, 4) == 3);
    CHECK(wrap(4, 4) == 0);
    CHECK(wrap(-1, 4) == 3);
    CHECK(wrap(-4, 4) == 0);
    CHECK(wrap(7, 4) == 3);
}

TEST_CASE("parse_pattern reads a small pattern") {
    Lattice lat = parse_pattern("10\n01\n");
    CHECK(lat.rows() == 2);
    CHECK(lat.cols() == 2);
    CHECK(lat.at(0, 0) == NodeState::A);
    CHECK(lat.at(0, 1) == NodeState::B);
    CHECK(lat.at(1, 0) == NodeState::B);
    CHECK(lat.at(1, 1) == NodeState::A);
}

TEST_CASE("parse_pattern tolerates blank lines, CR endings and trailing spaces") {
    Lattice lat = parse_pattern("\n10\r\n01  \n\n");
    CHECK(lat.rows() == 2);
    CHECK(lat.at(0, 0) == NodeState::A);
    CHECK(lat.at(1, 1) == NodeState::A);

    // Missing trailing newline is fine too.
    Lattice lat2 = parse_pattern("10\n01");
    CHECK(lat == lat2);
}

TEST_CASE("parse_pattern rejects malformed input") {
    CHECK_THROWS_AS(parse_pattern(""), ValidationError);
    CHECK_THROWS_AS(parse_pattern("\n\n"), ValidationError);

    // Odd row count is detected before the size check.
    CHECK_THROWS_WITH_AS(parse_pattern("1\n1\n1\n"),
                         doctest::Contains("even"), ValidationError);

    // Ragged row: error names the offending line.
    CHECK_THROWS_WITH_AS(parse_pattern("1010\n101\n"),
                         doctest::Contains("line 2"), ValidationError);

    // Illegal character: error names line and column.
    try {
        parse_pattern("10\n0x\n");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        std::string msg = e.what();
        CHECK(msg.find("line 2") != std::string::npos);
        CHECK(msg.find("column 2") != std::string::npos);
    }

    // Two rows of one column: too narrow.
    CHECK_THROWS_AS(parse_pattern("1\n1\n"), ValidationError);
}

TEST_CASE("serialize_pattern round trips") {
    CHECK(serialize_pattern(parse_pattern("10\n01\n")) == "10\n01\n");

    Lattice all_a(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) all_a.set(r, c, NodeState::A);
    CHECK(serialize_pattern(all_a) == "1111\n1111\n1111\n1111\n");

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Lattice lat = random_bits(8, 8, seed);
        CHECK(parse_pattern(serialize_pattern(lat)) == lat);
    }
}

TEST_CASE("nearest-neighbour enumeration count and multiplicity") {
    struct Shape { int r, c; };
    for (Shape s : {Shape{2, 2}, Shape{4, 4}, Shape{6, 8}, Shape{16, 16}}) {
        Lattice lat(s.r, s.c);
        auto pairs = enumerate_nn_pairs(lat);
        CHECK(pairs.size() == static_cast<std::size_t>(2 * s.r * s.c));

        // Every node participates in exactly 4 pairs: 2 as upper, 2 as lower.
        std::map<CellKey, int> upper, lower;
        for (const auto& p : pairs) {
            upper[key(p.upper.r, p.upper.c)]++;
            lower[key(p.lower.r, p.lower.c)]++;
        }
        for (int r = 0; r < s.r; ++r)
            for (int c = 0; c < s.c; ++c) {
                CHECK(upper[key(r, c)] == 2);
                CHECK(lower[key(r, c)] == 2);
            }
    }
}

TEST_CASE("nearest-neighbour pairs are distinct on tall lattices") {
    for (auto [r, c] : {std::pair{4, 4}, std::pair{6, 8}}) {
        Lattice lat(r, c);
        std::set<std::pair<CellKey, CellKey>> seen;
        for (const auto& p : enumerate_nn_pairs(lat)) {
            auto k = edge_key(key(p.upper.r, p.upper.c), key(p.lower.r, p.lower.c));
            CHECK(seen.insert(k).second);
        }
    }
}

TEST_CASE("nearest-neighbour geometry follows the row offset") {
    Lattice lat(4, 4);
    std::set<std::pair<CellKey, CellKey>> pairs;
    for (const auto& p : enumerate_nn_pairs(lat))
        pairs.insert({key(p.upper.r, p.upper.c), key(p.lower.r, p.lower.c)});

    // Even row: (0,1) pairs straight down and down-right.
    CHECK(pairs.count({key(0, 1), key(1, 1)}) == 1);
    CHECK(pairs.count({key(0, 1), key(1, 2)}) == 1);
    CHECK(pairs.count({key(0, 1), key(1, 0)}) == 0);

    // Odd row: (1,1) pairs down-left and straight down.
    CHECK(pairs.count({key(1, 1), key(2, 0)}) == 1);
    CHECK(pairs.count({key(1, 1), key(2, 1)}) == 1);
    CHECK(pairs.count({key(1, 1), key(2, 2)}) == 0);

    // Bottom row wraps to the top.
    CHECK(pairs.count({key(3, 0), key(0, 3)}) == 1);
    CHECK(pairs.count({key(3, 0), key(0, 0)}) == 1);
}

TEST_CASE("next-nearest enumeration covers each row edge once") {
    for (auto [r, c] : {std::pair{2, 2}, std::pair{4, 4}, std::pair{6, 8}}) {
        Lattice lat(r, c);
        auto pairs = enumerate_nnn_pairs(lat);
        CHECK(pairs.size() == static_cast<std::size_t>(r * c));
        std::map<CellKey, int> deg;
        for (const auto& p : pairs) {
            CHECK(p.left.r == p.right.r);
            CHECK(wrap(p.left.c + 1, c) == p.right.c);
            deg[key(p.left.r, p.left.c)]++;
            deg[key(p.right.r, p.right.c)]++;
        }
        for (auto& [cell, d] : deg) CHECK(d == 2);
    }
}

TEST_CASE("triplet enumeration count and node roles") {
    for (auto [r, c] : {std::pair{4, 4}, std::pair{6, 8}}) {
        Lattice lat(r, c);
        auto trips = enumerate_triplets(lat);
        CHECK(trips.size() == static_cast<std::size_t>(2 * r * c));

        std::map<CellKey, int> as_apex, as_end;
        for (const auto& t : trips) {
            as_apex[key(t.apex.r, t.apex.c)]++;
            as_end[key(t.left.r, t.left.c)]++;
            as_end[key(t.right.r, t.right.c)]++;
        }
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                CHECK(as_apex[key(i, j)] == 2);
                CHECK(as_end[key(i, j)] == 4);
            }
    }
}

TEST_CASE("triplet sides are nearest-neighbour bonds and bases are row bonds") {
    Lattice lat(4, 4);
    std::set<std::pair<CellKey, CellKey>> nn;
    for (const auto& p : enumerate_nn_pairs(lat))
        nn.insert(edge_key(key(p.upper.r, p.upper.c), key(p.lower.r, p.lower.c)));
    std::set<std::pair<CellKey, CellKey>> row_bonds;
    for (const auto& p : enumerate_nnn_pairs(lat))
        row_bonds.insert(edge_key(key(p.left.r, p.left.c), key(p.right.r, p.right.c)));

    for (const auto& t : enumerate_triplets(lat)) {
        CHECK(t.left.r == t.right.r);
        CHECK(t.apex.r != t.left.r);
        CHECK(nn.count(edge_key(key(t.left.r, t.left.c), key(t.apex.r, t.apex.c))) == 1);
        CHECK(nn.count(edge_key(key(t.apex.r, t.apex.c), key(t.right.r, t.right.c))) == 1);
        CHECK(row_bonds.count(edge_key(key(t.left.r, t.left.c), key(t.right.r, t.right.c))) == 1);
    }
}

TEST_CASE("apex column rule") {
    CHECK(apex_col(0, 2) == 3);  // even row: apex sits right of the left endpoint
    CHECK(apex_col(1, 2) == 2);  // odd row: apex sits above/below the left endpoint
}

TEST_CASE("fold_index maps a length-4 segment to BAABCDDC order") {
    const int n = 4;
    int expected[] = {1, 0, 0, 1, 2, 3, 3, 2};
    for (int i = 0; i < 2 * n; ++i) CHECK(fold_index(i, n) == expected[i]);
}

TEST_CASE("fold_index stays in range and touches every source index twice") {
    for (int n : {2, 4, 6, 16}) {
        std::vector<int> hits(n, 0);
        for (int i = 0; i < 2 * n; ++i) {
            int j = fold_index(i, n);
            REQUIRE(j >= 0);
            REQUIRE(j < n);
            hits[j]++;
        }
        for (int h : hits) CHECK(h == 2);
    }
}

TEST_CASE("build_envelope doubles both dimensions with mirrored copies") {
    // Core row 1000 must become 01100000 after the fold.
    Lattice core(2, 4);
    core.set(0, 0, NodeState::A);
    Lattice env = build_envelope(core);
    CHECK(env.rows() == 4);
    CHECK(env.cols() == 8);
    CHECK(serialize_pattern(env) ==
          "01100000\n"
          "01100000\n"
          "00000000\n"
          "00000000\n");
}

TEST_CASE("build_envelope preserves the A fraction exactly") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Lattice core = random_bits(4, 6, seed);
        Lattice env = build_envelope(core);
        CHECK(env.count_a() == 4 * core.count_a());
        for (int r = 0; r < env.rows(); ++r)
            for (int c = 0; c < env.cols(); ++c)
                CHECK(env.at(r, c) == core.at(fold_index(r, 4), fold_index(c, 6)));
    }
}

TEST_CASE("build_envelope requires even column count") {
    Lattice odd_cols(4, 5);
    CHECK_THROWS_AS(build_envelope(odd_cols), ValidationError);
}

TEST_CASE("swap_states exchanges two unlike cells and is an involution") {
    Lattice lat = parse_pattern("10\n01\n");
    swap_states(lat, {0, 0}, {0, 1});
    CHECK(serialize_pattern(lat) == "01\n01\n");
    swap_states(lat, {0, 0}, {0, 1});
    CHECK(serialize_pattern(lat) == "10\n01\n");

    CHECK_THROWS_AS(swap_states(lat, {0, 0}, {1, 1}), ValidationError);  // both A
    int before = lat.count_a();
    swap_states(lat, {1, 0}, {0, 0});
    CHECK(lat.count_a() == before);
}

TEST_CASE("random_equiprobable is deterministic and exactly balanced") {
    Lattice a = random_equiprobable(8, 8, 42);
    Lattice b = random_equiprobable(8, 8, 42);
    CHECK(a == b);
    CHECK(a.count_a() == 32);

    Lattice c = random_equiprobable(8, 8, 43);
    CHECK(a != c);

    std::set<std::string> seen;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Lattice lat = random_equiprobable(16, 16, seed);
        CHECK(lat.count_a() == 128);
        seen.insert(serialize_pattern(lat));
    }
    CHECK(seen.size() == 100);
}

TEST_CASE("stripe fixture alternates full rows") {
    CHECK(serialize_pattern(stripe_lattice(4, 4)) == "1111\n0000\n1111\n0000\n");
    Lattice s = stripe_lattice(6, 8);
    CHECK(s.count_a() == 24);
}

TEST_CASE("block fixture fills the top half") {
    CHECK(serialize_pattern(block_lattice(4, 4)) == "1111\n1111\n0000\n0000\n");
    CHECK(block_lattice(8, 4).count_a() == 16);
}

TEST_SUITE_END();
