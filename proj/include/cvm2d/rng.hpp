#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace cvm2d {

// Deterministic RNG used everywhere randomness is needed. Bounded draws use
// rejection sampling instead of std::uniform_int_distribution, whose output
// is implementation-defined; the same seed therefore yields the same stream
// on every standard library.
class Rng {
public:
    static constexpr std::string_view algorithm = "mt19937_64/rejection";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, n). Requires n > 0.
    std::uint64_t bounded(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return v % n;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace cvm2d
