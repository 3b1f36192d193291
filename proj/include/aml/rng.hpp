#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace aml {

// Deterministic seeded randomness. Every consumer derives its own stream
// from (seed, key...) so adding or reordering consumers never perturbs
// another stream, and parallel scheduling cannot change results.

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline uint64_t mix_key(uint64_t a, uint64_t b) {
    uint64_t s = a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
    return splitmix64(s);
}

inline uint64_t hash_str(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a 64
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Derives a sub-seed from a root seed and a label, e.g.
// derive_seed(seed, "walks"). Chains commute nowhere: order matters.
inline uint64_t derive_seed(uint64_t seed, std::string_view label) {
    return mix_key(seed, hash_str(label));
}

inline uint64_t derive_seed(uint64_t seed, std::initializer_list<uint64_t> keys) {
    uint64_t s = seed;
    for (uint64_t k : keys) s = mix_key(s, k);
    return s;
}

// Small deterministic generator (splitmix64 stream). All distributions are
// hand-rolled: std::*_distribution output is implementation-defined and
// would break cross-platform reproducibility.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    Rng(uint64_t seed, std::initializer_list<uint64_t> keys)
        : state_(derive_seed(seed, keys)) {}

    uint64_t next_u64() { return splitmix64(state_); }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n). n must be > 0.
    uint64_t next_below(uint64_t n) {
        // Multiply-shift; bias is < 2^-64 * n, irrelevant at our scales and
        // fully deterministic.
        return static_cast<uint64_t>((static_cast<__uint128_t>(next_u64()) * n) >> 64);
    }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Standard normal via Box-Muller (one value per call, second discarded
    // to keep the stream position independent of caller pairing).
    double normal() {
        double u1 = next_double();
        double u2 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    double lognormal(double log_mean, double log_sd) {
        return std::exp(log_mean + log_sd * normal());
    }

    // Knuth's algorithm; fine for the small means used here.
    uint32_t poisson(double mean) {
        const double limit = std::exp(-mean);
        double prod = 1.0;
        uint32_t n = 0;
        do {
            prod *= next_double();
            if (prod <= limit) return n;
            ++n;
        } while (n < 10000);
        return n;
    }

private:
    uint64_t state_;
};

}  // namespace aml
