#pragma once

#include <cstdint>
#include <vector>

#include "borelred/idempotents.hpp"
#include "borelred/matrix.hpp"
#include "borelred/rational.hpp"

namespace borelred {

using Quad = Quadruple<Rational>;

/// The moment map (r,s,i,j) -> [r,s] + i*j projected into the dual model
/// (strictly upper part killed).
DualBorelMatrix<Rational> moment(const Quad& q);

/// moment(q) = 0 and r has pairwise distinct diagonal entries.
bool in_zero_fiber_rss(const Quad& q);

/// Solves the strictly-lower moment equations for the subdiagonal of s,
/// level by level from the deepest subdiagonal upward, with the given
/// diagonal. The subdiagonal result does not depend on diag_s; the moment of
/// (r, s, i, j) is exactly diagonal afterwards, and its diagonal entries are
/// not forced to vanish.
DualBorelMatrix<Rational> solve_subdiagonal_s(const BorelMatrix<Rational>& r,
                                              const std::vector<Rational>& i,
                                              const std::vector<Rational>& j,
                                              const std::vector<Rational>& diag_s);

/// Point of the quotient target: x (intended eigenvalues, pairwise distinct)
/// and y (intended dual diagonal). Validated at construction.
struct TargetPoint {
    std::vector<Rational> x;
    std::vector<Rational> y;

    TargetPoint(std::vector<Rational> x_, std::vector<Rational> y_);

    int dim() const { return static_cast<int>(x.size()); }
    bool operator==(const TargetPoint& o) const { return x == o.x && y == o.y; }
};

enum class WitnessMode { Diagonal, Generic };

/// Given diag_y for the target, returns the diagonal that makes
/// tr(L^iota s) hit y_iota exactly, for the s whose strictly-lower part is
/// s_lower. The correction only involves off-diagonal entries of s.
std::vector<Rational> diagonal_for_target(const BorelMatrix<Rational>& r,
                                          const DualBorelMatrix<Rational>& s_lower,
                                          const std::vector<Rational>& y);

/// Produces a zero-fiber point mapping to t under the quotient map.
/// Diagonal mode returns the closed-orbit representative
/// (diag(x), diag(y), 0, 0); Generic mode draws a seeded instance with
/// non-diagonal r and nonzero i, with j = 0 so that every diagonal moment
/// entry vanishes, then corrects the s diagonal.
Quad surjectivity_witness(const TargetPoint& t, WitnessMode mode = WitnessMode::Diagonal,
                          std::uint64_t seed = 0, int max_coeff = 20);

/// Exact Jacobian of the n diagonal moment functions tr(j L^iota i) with
/// respect to the free coordinates, ordered as
/// [r_ab for a <= b in row-major order, x_1..x_n, y_1..y_n].
std::vector<std::vector<Rational>> moment_diagonal_jacobian(const Quad& q);

} // namespace borelred
