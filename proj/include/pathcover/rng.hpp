#pragma once

#include <cstdint>

namespace pathcover {

// SplitMix64 step (Steele/Lea/Vigna reference constants). Every random draw
// in this project goes through this generator: the standard <random>
// distributions are not bit-stable across library implementations, so
// bounded draws are implemented here as well.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Purpose tags for independent sub-streams of one seed. Each stage of the
// pipeline draws from its own stream so that, e.g., adding samples to the
// expansion checker cannot perturb graph sampling.
enum class RngStream : uint64_t {
    sampling = 1,
    gamma_selection = 2,
    expansion_check = 3,
    property_check = 4,
    trial = 5,
    instance = 6,
};

// Stream-splitting rule (fixed, documented so runs can be reproduced from
// the report alone): the derived seed is one SplitMix64 step applied to
// seed XOR (tag + 1) * 0x9E3779B97F4A7C15.
inline uint64_t derive_seed(uint64_t seed, uint64_t tag) {
    uint64_t s = seed ^ ((tag + 1) * 0x9E3779B97F4A7C15ULL);
    return splitmix64(s);
}

inline uint64_t derive_seed(uint64_t seed, RngStream stream) {
    return derive_seed(seed, static_cast<uint64_t>(stream));
}

class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), state_(seed) {}

    uint64_t next_u64() { return splitmix64(state_); }

    // Uniform in [0, 1), 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound), bound > 0. Rejection keeps the draw unbiased.
    uint64_t next_below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    // Sub-generator derived from this generator's original seed (not from
    // its current position).
    Rng substream(RngStream stream) const { return Rng(derive_seed(seed_, stream)); }
    Rng substream(uint64_t tag) const { return Rng(derive_seed(seed_, tag)); }

    uint64_t seed() const { return seed_; }

private:
    uint64_t seed_;
    uint64_t state_;
};

} // namespace pathcover
