#pragma once

#include <cstdint>
#include <random>

namespace htm {

// Seeded RNG with explicit integer/double mappings. std::mt19937_64 output is
// fully specified by the standard; the std distributions are not, so results
// would differ across standard libraries. The mappings below keep every fit
// bit-reproducible from a seed alone.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 bits of precision.
    double next_double() {
        return static_cast<double>(engine_() >> 11) * (1.0 / 9007199254740992.0);
    }

    /// Uniform integer in [0, n). n must be > 0.
    std::uint64_t next_below(std::uint64_t n) {
        // rejection sampling to avoid modulo bias
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace htm
