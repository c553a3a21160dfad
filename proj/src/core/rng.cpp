#include "core/rng.hpp"

#include <cmath>

namespace ecoclust {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound < 2) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
}

Rng Rng::derive(std::uint64_t id) const {
    // Finalizer-style mix of the current state with the stream id. The
    // parent is not advanced: deriving stream k twice yields the same child.
    std::uint64_t z = state_ ^ (0x9E3779B97F4A7C15ULL * (id + 1));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return Rng(z ^ (z >> 31));
}

} // namespace ecoclust
