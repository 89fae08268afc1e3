#include "cvm2d/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "cvm2d/errors.hpp"
#include "cvm2d/rng.hpp"

namespace cvm2d {

Lattice::Lattice(int rows, int cols, NodeState fill)
    : rows_(rows), cols_(cols) {
    if (rows < 2 || cols < 2)
        throw ValidationError("lattice must be at least 2x2, got " + std::to_string(rows) +
                              "x" + std::to_string(cols));
    if (rows % 2 != 0)
        throw ValidationError("row count must be even, got " + std::to_string(rows));
    cells_.assign(static_cast<std::size_t>(rows) * cols, fill);
}

std::int64_t Lattice::count_a() const {
    return std::count(cells_.begin(), cells_.end(), NodeState::A);
}

std::vector<NnPair> enumerate_nn_pairs(const Lattice& lat) {
    std::vector<NnPair> out;
    out.reserve(static_cast<std::size_t>(2) * lat.rows() * lat.cols());
    for (int r = 0; r < lat.rows(); ++r) {
        const int below = wrap(r + 1, lat.rows());
        for (int c = 0; c < lat.cols(); ++c) {
            // Two lower diagonal neighbors of (r,c); offset depends on row parity.
            const int c0 = (r % 2 == 0) ? c : c - 1;
            out.push_back({{r, c}, {below, wrap(c0, lat.cols())}});
            out.push_back({{r, c}, {below, wrap(c0 + 1, lat.cols())}});
        }
    }
    return out;
}

std::vector<NnnPair> enumerate_nnn_pairs(const Lattice& lat) {
    std::vector<NnnPair> out;
    out.reserve(static_cast<std::size_t>(lat.rows()) * lat.cols());
    for (int r = 0; r < lat.rows(); ++r)
        for (int c = 0; c < lat.cols(); ++c)
            out.push_back({{r, c}, {r, wrap(c + 1, lat.cols())}});
    return out;
}

std::vector<Triplet> enumerate_triplets(const Lattice& lat) {
    std::vector<Triplet> out;
    out.reserve(static_cast<std::size_t>(2) * lat.rows() * lat.cols());
    for (int r = 0; r < lat.rows(); ++r) {
        for (int c = 0; c < lat.cols(); ++c) {
            const Cell left{r, c};
            const Cell right{r, wrap(c + 1, lat.cols())};
            const int ac = wrap(apex_col(r, c), lat.cols());
            out.push_back({left, {wrap(r + 1, lat.rows()), ac}, right});
            out.push_back({left, {wrap(r - 1, lat.rows()), ac}, right});
        }
    }
    return out;
}

Lattice parse_pattern(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    int line_no = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);
        if (!line.empty()) {
            for (std::size_t i = 0; i < line.size(); ++i)
                if (line[i] != '0' && line[i] != '1')
                    throw ValidationError("line " + std::to_string(line_no) + ", column " +
                                          std::to_string(i + 1) + ": invalid character '" +
                                          std::string(1, line[i]) + "' (expected '0' or '1')");
            if (!lines.empty() && line.size() != lines.front().size())
                throw ValidationError("line " + std::to_string(line_no) + ": expected " +
                                      std::to_string(lines.front().size()) + " columns, got " +
                                      std::to_string(line.size()));
            lines.emplace_back(line);
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    if (lines.empty()) throw ValidationError("empty pattern");
    if (lines.size() % 2 != 0)
        throw ValidationError("row count must be even, got " + std::to_string(lines.size()));

    Lattice lat(static_cast<int>(lines.size()), static_cast<int>(lines.front().size()));
    for (int r = 0; r < lat.rows(); ++r)
        for (int c = 0; c < lat.cols(); ++c)
            lat.set(r, c, lines[r][c] == '1' ? NodeState::A : NodeState::B);
    return lat;
}

std::string serialize_pattern(const Lattice& lat) {
    std::string out;
    out.reserve(static_cast<std::size_t>(lat.rows()) * (lat.cols() + 1));
    for (int r = 0; r < lat.rows(); ++r) {
        for (int c = 0; c < lat.cols(); ++c)
            out.push_back(lat.at(r, c) == NodeState::A ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

int fold_index(int i, int n) {
    const int half = n / 2;
    if (i < half) return half - 1 - i;
    if (i < n + half) return i - half;
    return 2 * n + half - 1 - i;
}

Lattice build_envelope(const Lattice& core) {
    if (core.rows() % 2 != 0 || core.cols() % 2 != 0)
        throw ValidationError("envelope core dimensions must be even, got " +
                              std::to_string(core.rows()) + "x" + std::to_string(core.cols()));
    Lattice out(2 * core.rows(), 2 * core.cols());
    for (int r = 0; r < out.rows(); ++r)
        for (int c = 0; c < out.cols(); ++c)
            out.set(r, c, core.at(fold_index(r, core.rows()), fold_index(c, core.cols())));
    return out;
}

void swap_states(Lattice& lat, Cell a, Cell b) {
    const NodeState sa = lat.at(a.r, a.c);
    const NodeState sb = lat.at(b.r, b.c);
    if (sa == sb)
        throw ValidationError("swap_states requires opposite states, both cells are '" +
                              std::string(sa == NodeState::A ? "1" : "0") + "'");
    lat.set(a.r, a.c, sb);
    lat.set(b.r, b.c, sa);
}

Lattice random_equiprobable(int rows, int cols, std::uint64_t seed) {
    Lattice lat(rows, cols);
    const std::int64_t n = static_cast<std::int64_t>(rows) * cols;
    if (n % 2 != 0) throw ValidationError("cell count must be even for an equiprobable fill");

    std::vector<NodeState> cells(static_cast<std::size_t>(n), NodeState::B);
    std::fill(cells.begin(), cells.begin() + n / 2, NodeState::A);
    Rng rng(seed);
    for (std::int64_t i = n - 1; i > 0; --i) {
        const std::int64_t j = static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(i + 1)));
        std::swap(cells[i], cells[j]);
    }
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            lat.set(r, c, cells[static_cast<std::size_t>(r) * cols + c]);
    return lat;
}

Lattice stripe_lattice(int rows, int cols) {
    Lattice lat(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            lat.set(r, c, r % 2 == 0 ? NodeState::A : NodeState::B);
    return lat;
}

Lattice block_lattice(int rows, int cols) {
    Lattice lat(rows, cols);
    for (int r = 0; r < rows / 2; ++r)
        for (int c = 0; c < cols; ++c)
            lat.set(r, c, NodeState::A);
    return lat;
}

}  // namespace cvm2d
