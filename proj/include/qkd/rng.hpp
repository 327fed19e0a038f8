#pragma once

#include <cstdint>
#include <random>

namespace qkd {

// Explicitly seeded pseudorandom source. All sampling in the library draws
// from a RandomSource passed in by the caller; there is no ambient global
// randomness. Identical seeds give bit-identical draw sequences.
//
// split() derives an independent child stream deterministically, so one
// session seed can fan out into per-purpose streams with a fixed draw order.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(scramble(seed)) {}

    // Child stream keyed off the next engine output. Advances this source.
    RandomSource split() { return RandomSource(engine_()); }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform double in [0, 1) with 53 bits of precision. Computed from raw
    // engine output so the sequence does not depend on the standard
    // library's distribution implementation.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n). Rejection sampling, bias-free.
    std::uint64_t uniform_int(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

private:
    // splitmix64; decorrelates consecutive integer seeds before they reach
    // the engine.
    static std::uint64_t scramble(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
};

} // namespace qkd
