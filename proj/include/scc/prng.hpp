#pragma once

#include <cstdint>

namespace scc {

/// Deterministic 64-bit generator (splitmix64).
///
/// The recurrence is fixed so that any consumer can reproduce the exact
/// stream from a seed:
///
///   state := state + 0x9E3779B97F4A7C15
///   z := state
///   z := (z xor (z >> 30)) * 0xBF58476D1CE4E5B9
///   z := (z xor (z >> 27)) * 0x94D049BB133111EB
///   output := z xor (z >> 31)
///
/// Uniform doubles in [0,1) take the top 53 bits: (output >> 11) * 2^-53.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, bound). bound must be nonzero.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

} // namespace scc
