#pragma once
#include <cstdint>
#include <random>

namespace gaborlab {

/// Deterministic uniform source. The raw engine (mt19937_64) is fully
/// specified by the standard and the mapping to doubles is spelled out
/// below, so a given seed produces the same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    bool coin() { return uniform() < 0.5; }

    /// Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(uniform() * static_cast<double>(hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
};

} // namespace gaborlab
