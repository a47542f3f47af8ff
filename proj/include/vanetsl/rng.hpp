#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace vanetsl {

// Deterministic random stream. All distributions are derived from raw
// mt19937_64 draws by hand so that a given seed reproduces the same
// sequence regardless of standard-library internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Knuth's product-of-uniforms method; fine for the small per-tick means
    // used by the arrival process.
    int poisson(double mean) {
        const double limit = std::exp(-mean);
        int k = 0;
        double product = 1.0;
        do {
            ++k;
            product *= uniform();
        } while (product > limit);
        return k - 1;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace vanetsl
