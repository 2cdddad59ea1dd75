#include "fplab/domain.hpp"

#include <random>
#include <stdexcept>

namespace fplab {

Domain Domain::grid(double lo, double hi, int count) {
    Domain d;
    d.lo = lo;
    d.hi = hi;
    d.sampler = Sampler::Grid;
    d.count = count;
    if (!(lo < hi)) throw std::invalid_argument("Domain: requires lo < hi");
    if (count < 2) throw std::invalid_argument("Domain: grid needs at least 2 points");
    return d;
}

Domain Domain::random(double lo, double hi, int count, std::uint64_t seed) {
    Domain d;
    d.lo = lo;
    d.hi = hi;
    d.sampler = Sampler::Random;
    d.count = count;
    d.seed = seed;
    if (!(lo < hi)) throw std::invalid_argument("Domain: requires lo < hi");
    if (count < 1) throw std::invalid_argument("Domain: needs at least 1 point");
    return d;
}

std::vector<double> Domain::points() const {
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(count));
    if (sampler == Sampler::Grid) {
        for (int i = 0; i < count; ++i) {
            double t = static_cast<double>(i) / static_cast<double>(count - 1);
            pts.push_back(i == count - 1 ? hi : lo + t * (hi - lo));
        }
    } else {
        // Explicit bit mapping instead of uniform_real_distribution, whose
        // output is implementation-defined.
        std::mt19937_64 rng(seed);
        for (int i = 0; i < count; ++i) {
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            pts.push_back(lo + u * (hi - lo));
        }
    }
    return pts;
}

} // namespace fplab
