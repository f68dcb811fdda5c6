#pragma once

#include <utility>
#include <vector>

#include "borelred/laurent.hpp"
#include "borelred/moment_map.hpp"

namespace borelred {

using LaurentQuad = Quadruple<LaurentPoly>;

/// Exponents (a_1, ..., a_n) of the diagonal one-parameter subgroup
/// diag(t^{a_1}, ..., t^{a_n}).
struct OneParamSubgroup {
    std::vector<int> exponents;

    int dim() const { return static_cast<int>(exponents.size()); }
    bool operator==(const OneParamSubgroup& o) const { return exponents == o.exponents; }
};

/// Closed-form Borel element b (and its closed-form inverse) with
/// b r b^-1 = diag(r): row iota of b is d_ii times row iota of the iota-th
/// idempotent, column iota of b^-1 is 1/d_ii times its column iota. Both
/// identities b * b_inv = I and b r b_inv = diag(r) are asserted exactly
/// before returning.
std::pair<BorelMatrix<Rational>, BorelMatrix<Rational>> diagonalizing_borel(
    const BorelMatrix<Rational>& r, const std::vector<Rational>& d);

std::pair<BorelMatrix<Rational>, BorelMatrix<Rational>> diagonalizing_borel(
    const BorelMatrix<Rational>& r);

/// Per-coordinate recipe on the diagonalized fiber: +1 where the vector
/// coordinate is nonzero, -1 where the covector coordinate is nonzero, 0
/// otherwise. Throws InvalidFiberPointError when both are nonzero at once.
OneParamSubgroup limit_exponents(const std::vector<Rational>& i_prime,
                                 const std::vector<Rational>& j_prime);

/// Lifts a rational quadruple to constant Laurent entries.
LaurentQuad to_laurent(const Quad& q);

/// Literal action of diag(t^{a_k}): conjugation on r and s (with the dual
/// projection), scaling on i and j, over Laurent-polynomial matrices.
LaurentQuad one_param_act(const OneParamSubgroup& lambda, const Quad& q);

struct OrbitLimit {
    Quad point;               ///< the t -> 0 limit (diag r, diag s', 0, 0)
    OneParamSubgroup lambda;  ///< exponents picked by the recipe
    LaurentQuad curve;        ///< the acted quadruple before taking the limit
};

/// Diagonalizes q, applies the recipe's one-parameter subgroup symbolically,
/// verifies that no entry has a pole at t = 0, and returns the exact limit,
/// which is always of the form (diag(r), diag(tr(L^iota s)), 0, 0).
/// Requires q in the regular semisimple zero fiber.
OrbitLimit orbit_limit(const Quad& q);

} // namespace borelred
