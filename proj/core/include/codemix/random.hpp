#pragma once

#include <cstdint>
#include <random>

namespace codemix {

/// Seeded generator with a fixed, platform-independent output sequence.
///
/// The engine is std::mt19937_64, whose sequence the standard pins down.
/// Bounded integers use rejection on the raw 64-bit output (no modulo bias)
/// and reals take the top 53 bits, so nothing depends on the library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n);

    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace codemix
