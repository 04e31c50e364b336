// Seeded randomness helpers.  Distributions are hand-rolled on top of a
// fixed 64-bit generator so that identical seeds give identical streams on
// every platform.
#pragma once

#include <random>

#include "tropical.hpp"

namespace tropgossip {

using Rng = std::mt19937_64;

inline uint64_t rand_below(Rng& rng, uint64_t bound) {
    // Bounded rejection; bias-free and implementation independent.
    uint64_t threshold = (-bound) % bound;
    for (;;) {
        uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

inline long rand_int(Rng& rng, long lo, long hi) {
    return lo + long(rand_below(rng, uint64_t(hi - lo + 1)));
}

inline Rat rand_rat(Rng& rng, long num_lo, long num_hi, long den_hi) {
    return Rat(rand_int(rng, num_lo, num_hi), rand_int(rng, 1, den_hi));
}

inline bool rand_chance(Rng& rng, uint32_t num, uint32_t den) {
    return rand_below(rng, den) < num;
}

}  // namespace tropgossip
