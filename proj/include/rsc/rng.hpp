#ifndef RSC_RNG_HPP
#define RSC_RNG_HPP

#include <cmath>
#include <cstdint>

namespace rsc {

// Counter-based splittable generator. Identical (seed, stream) yields an
// identical draw sequence; substreams are independent for distinct keys.
// The mixing function is the SplitMix64 finalizer over a keyed counter.
struct RngState {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::uint64_t counter = 0;

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t next_u64() {
        std::uint64_t base = mix(seed) ^ mix(stream ^ 0xda3e39cb94b95bdbull);
        return mix(base + (++counter) * 0x9e3779b97f4a7c15ull);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // p in {0,1} short-circuits and consumes no draw.
    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return next_double() < p;
    }

    // Standard normal via Box-Muller (two draws per call).
    double next_normal() {
        double u1 = next_double();
        double u2 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    RngState substream(std::uint64_t key) const {
        return RngState{seed, stream * 0x100000001b3ull + key + 1, 0};
    }
};

}  // namespace rsc

#endif
