#pragma once

#include <cstdint>

#include "borelred/rational.hpp"

namespace borelred {

/// Deterministic 64-bit generator (splitmix64). Used instead of the standard
/// distributions so that seeded reports are byte-identical across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound); bound > 0. Rejection keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    bool coin() { return (next() & 1u) != 0; }

private:
    std::uint64_t state_;
};

/// Mixes auxiliary stream identifiers into a seed so that per-(n, trial)
/// substreams are independent and reproducible.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    SplitMix64 g(seed ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xc2b2ae3d27d4eb4fULL));
    return g.next();
}

/// Random rational with |numerator| <= max_coeff and denominator in
/// [1, max_coeff].
Rational random_rational(SplitMix64& rng, int max_coeff);
Rational random_nonzero_rational(SplitMix64& rng, int max_coeff);

} // namespace borelred
