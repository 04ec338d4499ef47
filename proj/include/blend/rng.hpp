#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace blend {

// Seeded random source with fully specified output.
//
// std::mt19937_64 produces an identical stream on every conforming
// implementation, but the standard distributions do not, so uniform and
// normal draws are derived here by hand:
//   uniform01: top 53 bits of one engine output, scaled by 2^-53 -> [0,1)
//   normal:    Box-Muller on two uniform draws
// Fixtures generated from a given seed are therefore identical across
// platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // Standard normal via Box-Muller. Consumes exactly two engine outputs.
    double normal() {
        double u1 = uniform01();
        double u2 = uniform01();
        // u1 = 0 would take log(0); nudge to the smallest positive draw.
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        return r * std::cos(2.0 * std::numbers::pi * u2);
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

// Cheap integer mix for deriving independent child seeds (splitmix64 step).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace blend
