#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cvm2d {

// Binary node state. A is "on" (written '1'), B is "off" (written '0').
enum class NodeState : std::uint8_t { B = 0, A = 1 };

struct Cell {
    int r = 0;
    int c = 0;
    bool operator==(const Cell&) const = default;
};

inline int wrap(int i, int n) {
    const int m = i % n;
    return m < 0 ? m + n : m;
}

// Toroidal lattice with zigzag (staggered) rows: even rows are offset so that
// the diagonal neighbors of (r,c) in the row below are (r+1,c) and (r+1,c+1)
// for even r, and (r+1,c-1) and (r+1,c) for odd r. Row count must be even so
// the two-row zigzag period closes around the torus. Minimum size 2x2.
class Lattice {
public:
    Lattice(int rows, int cols, NodeState fill = NodeState::B);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t size() const { return cells_.size(); }

    NodeState at(int r, int c) const { return cells_[static_cast<std::size_t>(r) * cols_ + c]; }
    NodeState at_wrapped(int r, int c) const { return at(wrap(r, rows_), wrap(c, cols_)); }
    void set(int r, int c, NodeState s) { cells_[static_cast<std::size_t>(r) * cols_ + c] = s; }

    std::int64_t count_a() const;

    bool operator==(const Lattice&) const = default;

private:
    int rows_;
    int cols_;
    std::vector<NodeState> cells_;
};

// Diagonal (nearest-neighbor) pair, upper-row node first.
struct NnPair {
    Cell upper, lower;
    bool operator==(const NnPair&) const = default;
};

// Horizontal (next-nearest-neighbor) pair, left node first.
struct NnnPair {
    Cell left, right;
    bool operator==(const NnnPair&) const = default;
};

// V / inverted-V triplet read (left endpoint, apex, right endpoint); the
// endpoints are a horizontal pair, the apex sits diagonally between them in
// an adjacent row.
struct Triplet {
    Cell left, apex, right;
    bool operator==(const Triplet&) const = default;
};

// Column of the apex between horizontal endpoints (r,c) and (r,c+1), in both
// adjacent rows: c+1 for even r, c for odd r (before wrapping).
inline int apex_col(int r, int c) { return (r % 2 == 0) ? c + 1 : c; }

// Every diagonal adjacency exactly once, upper-row node first: 2*rows*cols pairs.
std::vector<NnPair> enumerate_nn_pairs(const Lattice& lat);

// Every same-row horizontal adjacency exactly once: rows*cols pairs.
std::vector<NnnPair> enumerate_nnn_pairs(const Lattice& lat);

// Every triplet exactly once (downward and upward apex per horizontal pair):
// 2*rows*cols triplets.
std::vector<Triplet> enumerate_triplets(const Lattice& lat);

// Parse lines of '0'/'1' (LF or CRLF, trailing whitespace and blank lines
// ignored) into a lattice. Errors carry line/column context.
Lattice parse_pattern(std::string_view text);

// Inverse of parse_pattern: one line per row, '1' = A, '0' = B, LF endings.
std::string serialize_pattern(const Lattice& lat);

// Index map for the mirror envelope: positions 0..2n-1 fold back onto core
// indices so both torus seams reflect the core edges.
int fold_index(int i, int n);

// Mirror-envelope construction: out[r][c] = core[fold(r)][fold(c)], doubling
// both dimensions. Every core cell appears exactly four times, so all single
// -node fractions are preserved. Core dimensions must be even.
Lattice build_envelope(const Lattice& core);

// Exchange the states of two cells holding opposite states.
void swap_states(Lattice& lat, Cell a, Cell b);

// Uniformly shuffled lattice with exactly half the cells A. Deterministic
// per seed.
Lattice random_equiprobable(int rows, int cols, std::uint64_t seed);

// Alternating all-A / all-B rows, row 0 all A.
Lattice stripe_lattice(int rows, int cols);

// Contiguous A band in the top rows/2 rows (maximally clustered at x1 = 0.5).
Lattice block_lattice(int rows, int cols);

}  // namespace cvm2d
