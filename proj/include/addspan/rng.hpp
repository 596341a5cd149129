// rng.hpp - Seeded random number helpers shared by generators and samplers.
//
// All randomness in the toolkit flows through this wrapper so that results
// are bit-for-bit reproducible for a given 64-bit seed, independent of the
// standard library's distribution implementations.

#ifndef ADDSPAN_RNG_HPP
#define ADDSPAN_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace addspan {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stream tags keep the draws used by different stages independent, so that
// e.g. sampling S1 never perturbs the S2 sample for the same seed.
namespace stream {
inline constexpr std::uint64_t kEdges = 0x45444745AULL;
inline constexpr std::uint64_t kWeights = 0x57454948AULL;
inline constexpr std::uint64_t kS1 = 0x5331ULL;
inline constexpr std::uint64_t kS2 = 0x5332ULL;
inline constexpr std::uint64_t kPairs = 0x5041495253ULL;
inline constexpr std::uint64_t kTrials = 0x545249414CULL;
} // namespace stream

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0,1), 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound), rejection-sampled so it is unbiased.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
        const std::uint64_t threshold = -bound % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
    std::mt19937_64 eng_;
};

// Independent Bernoulli(p) sample over node ids 0..n-1, returned sorted.
inline std::vector<int> bernoulli_sample(int n, double p, std::uint64_t seed, std::uint64_t tag) {
    Rng rng(seed ^ tag);
    std::vector<int> picked;
    for (int v = 0; v < n; ++v) {
        if (rng.uniform01() < p) picked.push_back(v);
    }
    return picked;
}

} // namespace addspan

#endif
