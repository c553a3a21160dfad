#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace ecoclust {

// SplitMix64 with hand-rolled sampling routines. Standard-library
// distributions and std::shuffle are implementation-defined, so every
// randomized result here goes through this generator to keep byte-identical
// output across platforms and compiler versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 mantissa bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound). Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound);

    // Standard normal via Marsaglia's polar method; caches the spare value.
    double gaussian();

    // Fisher-Yates, iterating from the back. Same element order in, same
    // permutation out, regardless of element type.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Child generator for stream `id`. Derivation hashes (state, id) so
    // resamples can be seeded per index and stay order-independent.
    Rng derive(std::uint64_t id) const;

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace ecoclust
