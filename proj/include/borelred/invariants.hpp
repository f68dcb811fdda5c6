#pragma once

#include <vector>

#include "borelred/moment_map.hpp"

namespace borelred {

/// tr(j L^iota i): diagonal moment entry after elimination. Bilinear in
/// (i, j), invariant under the group action.
Rational invariant_F(const Quad& q, int iota);

/// tr(L^iota s): the iota-th dual diagonal coordinate after diagonalization.
Rational invariant_G(const Quad& q, int iota);

/// tr(L^iota r) = r_ii.
Rational invariant_H(const Quad& q, int iota);

/// [tr((L^nu - L^gamma) r)]^-1 = (r_nn - r_gg)^-1, for gamma < nu.
Rational invariant_K(const Quad& q, int gamma, int nu);

/// Unnormalized trace forms: the same values computed as
/// [tr(prod)]^-1 tr(prod ...) with the shared normalizing scalar divided out
/// once at the end. These are the independent cross-check route.
Rational invariant_F_trace_form(const Quad& q, int iota);
Rational invariant_G_trace_form(const Quad& q, int iota);
Rational invariant_H_trace_form(const Quad& q, int iota);

/// All invariant values of a quadruple, computed from one idempotent family.
/// K is stored for gamma < nu only; the accessor is antisymmetric.
struct InvariantVector {
    std::vector<Rational> F, G, H;
    std::vector<Rational> K; // pairs (gamma, nu), gamma < nu, lexicographic

    static int pair_index(int n, int gamma, int nu);

    int dim() const { return static_cast<int>(F.size()); }

    /// K_{gamma,nu} for gamma < nu; -K_{nu,gamma} for gamma > nu.
    Rational k(int gamma, int nu) const;
};

InvariantVector invariant_vector(const Quad& q);

/// The quotient map: q |-> (r_11..r_nn, tr(L^1 s)..tr(L^n s)). Requires q in
/// the regular semisimple zero fiber; the image has pairwise distinct first
/// block by construction.
TargetPoint quotient_map(const Quad& q);

} // namespace borelred
