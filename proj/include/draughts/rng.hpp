#pragma once

#include <cstdint>

namespace draughts {

// splitmix64 finalizer (Stafford mix13, as published by Steele et al.).
// Pure 64-bit integer arithmetic, so the output is identical on every
// platform.
constexpr uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Deterministic stream of uniform draws, fully defined by a 64-bit seed.
// The stream is splitmix64: state advances by the golden-ratio increment
// and each output is mix64 of the new state.
class RandomSource {
public:
    static constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ull;

    explicit RandomSource(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        state_ += kGamma;
        return mix64(state_);
    }

    // Uniform draw in [0, n), n >= 1. Rejection sampling removes modulo
    // bias; exactly one next_u64() is consumed unless a rejection occurs
    // (probability < n / 2^64). n == 1 still consumes one draw.
    uint32_t uniform_index(uint32_t n) {
        const uint64_t threshold = (0 - uint64_t(n)) % n;  // 2^64 mod n
        for (;;) {
            const uint64_t r = next_u64();
            if (r >= threshold) return uint32_t(r % n);
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // True with probability p. Deterministic branches (p <= 0 or p >= 1)
    // consume no draw, which keeps traces of degenerate strategies
    // identical to the pure strategy they reduce to.
    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return uniform01() < p;
    }

private:
    uint64_t state_;
};

// Stateless per-index seed derivation for batch runs: every match index
// maps to its own seed independently of execution order or worker count.
constexpr uint64_t derive_match_seed(uint64_t master_seed, uint64_t index) {
    return mix64(master_seed + RandomSource::kGamma * (index + 1));
}

}  // namespace draughts
