#pragma once

#include <cstdint>
#include <vector>

namespace fplab {

// Closed interval domain with a deterministic point sampler.
struct Domain {
    enum class Sampler { Grid, Random };

    double lo = 0.0;
    double hi = 1.0;
    Sampler sampler = Sampler::Grid;
    int count = 101;
    std::uint64_t seed = 0;

    static Domain grid(double lo, double hi, int count);
    static Domain random(double lo, double hi, int count, std::uint64_t seed);

    // Grid: exactly `count` equally spaced points including both endpoints.
    // Random: deterministic for a given (seed, count); all points in [lo, hi].
    std::vector<double> points() const;

    bool contains(double x, double slack = 1e-12) const {
        return x >= lo - slack && x <= hi + slack;
    }
};

} // namespace fplab
