#include "borelred/rng.hpp"

#include "borelred/errors.hpp"

namespace borelred {

Rational random_rational(SplitMix64& rng, int max_coeff) {
    if (max_coeff < 1) throw Error("max_coeff must be at least 1");
    const auto span = static_cast<std::uint64_t>(max_coeff);
    const long num = static_cast<long>(rng.below(2 * span + 1)) - max_coeff;
    const long den = static_cast<long>(rng.below(span)) + 1;
    return Rational(num, den);
}

Rational random_nonzero_rational(SplitMix64& rng, int max_coeff) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Rational q = random_rational(rng, max_coeff);
        if (!q.is_zero()) return q;
    }
    throw Error("failed to draw a nonzero rational");
}

} // namespace borelred
