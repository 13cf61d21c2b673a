#pragma once

/// Counter-style splittable generator: stream (seed, index) is a fixed function
/// of its two arguments, so parallel producers get reproducible disjoint streams.

#include <cstdint>

namespace fock {

class SplitStream {
public:
    explicit SplitStream(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(mix(seed) ^ mix(stream + 0x9E3779B97F4A7C15ull)) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    /// Uniform in [0, 1), 53 random bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [-1, 1).
    double next_signed() { return 2.0 * next_unit() - 1.0; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

}  // namespace fock
