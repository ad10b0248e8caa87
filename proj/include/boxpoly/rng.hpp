#pragma once

#include <cstdint>

namespace boxpoly {

// SplitMix64. Chosen as the harness generator because its output stream is
// fully specified by the 64-bit seed, independent of platform and standard
// library. The algorithm name is recorded in emitted file headers so results
// can be regenerated elsewhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Unbiased draw from [0, bound), bound >= 1, via rejection sampling.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

private:
    std::uint64_t state_;
};

inline constexpr const char* kRngName = "splitmix64";

}  // namespace boxpoly
