#pragma once

#include <cstdint>
#include <string_view>

namespace conescale {

/// Counter-based 64-bit generator (SplitMix64). The state advances by a fixed
/// odd constant and the output is a bijective finalizer of the counter, so a
/// stream is fully determined by its seed and the draw index. All sampled
/// checks in the library run on streams of this generator to keep reports
/// reproducible across runs and platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    bool chance(double p) { return uniform() < p; }

private:
    std::uint64_t state_;
};

/// FNV-1a used to derive independent, order-insensitive substreams from a
/// base seed and a stable check name.
inline std::uint64_t stream_seed(std::uint64_t seed, std::string_view name) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return seed ^ h;
}

}  // namespace conescale
