#pragma once

#include <cstdint>
#include <vector>

#include "borelred/moment_map.hpp"
#include "borelred/rng.hpp"

namespace borelred {

inline constexpr int kDefaultMaxCoeff = 20;
inline constexpr int kRejectionLimit = 1000;

std::vector<Rational> random_vector(SplitMix64& rng, int n, int max_coeff);

/// Upper-triangular with pairwise distinct diagonal, drawn by bounded
/// rejection sampling.
BorelMatrix<Rational> random_rss_borel(SplitMix64& rng, int n, int max_coeff);

/// Upper-triangular with nonzero diagonal (a group element).
BorelMatrix<Rational> random_invertible_borel(SplitMix64& rng, int n, int max_coeff);

DualBorelMatrix<Rational> random_dual_borel(SplitMix64& rng, int n, int max_coeff);

std::vector<Rational> random_invertible_diagonal(SplitMix64& rng, int n, int max_coeff);

TargetPoint random_target(SplitMix64& rng, int n, int max_coeff);

enum class GenMode { Fiber, Free };

/// Deterministic per (n, seed). Free mode draws every carrier independently;
/// Fiber mode additionally forces the quadruple into the regular semisimple
/// zero fiber: a random index subset S splits the idempotent ranges, i is
/// drawn from the ranges outside S and j from those inside S (so every
/// diagonal moment entry vanishes), and s is produced by the subdiagonal
/// solver with a random diagonal.
Quad generate_instance(int n, std::uint64_t seed, GenMode mode, int max_coeff = kDefaultMaxCoeff);

/// Fiber instance from the dense stratum: for every index, the surviving
/// framing factor is nonzero (the vector keeps its component along each
/// idempotent range outside S, the covector along each range inside S). On
/// this stratum the diagonal moment Jacobian has full rank; on degenerate
/// strata (e.g. the closed-orbit points i = j = 0) it provably drops.
Quad generate_generic_fiber_instance(int n, std::uint64_t seed, int max_coeff = kDefaultMaxCoeff);

} // namespace borelred
