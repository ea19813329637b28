// Seedable, cross-platform-stable random source.
//
// std::mt19937_64 is fully specified by the standard, but the std::*_distribution
// adaptors are not, so raw engine output is mapped to doubles/integers by hand here.
// Every random draw in the project goes through this wrapper, which is what makes
// "same seed => byte-identical output" hold on any conforming implementation.

#ifndef CGC_RNG_HPP
#define CGC_RNG_HPP

#include <cstdint>
#include <random>

namespace cgc {

// One splitmix64 step; also the seed-mixing primitive.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Derives the seed of sub-stream `stream` from a master seed. Streams are
// decorrelated by mixing the stream id through splitmix64; the rule is part of
// the reproducibility contract (manifests record master seed + stream ids).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t state = seed ^ (0xD1B54A32D192ED03ULL * (stream + 1));
    std::uint64_t out = splitmix64_next(state);
    return splitmix64_next(state) ^ out;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1): top 53 bits of the engine output.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound), bound >= 1; rejection keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace cgc

#endif
