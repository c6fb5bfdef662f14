#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "rewire/errors.hpp"

namespace rewire {

// Seeded generator with bit-stable derived draws. mt19937_64 output is fully
// specified by the standard; the bounded/unit draws are implemented here
// because std::uniform_*_distribution is not reproducible across standard
// library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Unbiased draw from [0, n) via rejection sampling.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0)
            throw usage_error("Rng::below: n must be positive");
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t rem = (max % n + 1) % n;
        const std::uint64_t bound = max - rem; // inclusive
        std::uint64_t r = engine_();
        while (r > bound)
            r = engine_();
        return r % n;
    }

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

} // namespace rewire
