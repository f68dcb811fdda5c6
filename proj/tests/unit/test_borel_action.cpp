#include <catch2/catch_amalgamated.hpp>

#include "borelred/borel_action.hpp"
#include "borelred/instance_gen.hpp"
#include "borelred/invariants.hpp"

using namespace borelred;

namespace {

Matrix<Rational> mat2(long a, long b, long c, long d) {
    Matrix<Rational> m(2);
    m(0, 0) = Rational(a); m(0, 1) = Rational(b);
    m(1, 0) = Rational(c); m(1, 1) = Rational(d);
    return m;
}

Quad running_example() {
    return Quad(BorelMatrix<Rational>(mat2(1, 1, 0, 2)),
                DualBorelMatrix<Rational>(mat2(0, 0, -1, 0)),
                {Rational(1), Rational(1)}, {Rational(1), Rational(-1)});
}

} // namespace

namespace {

// Test-only oracle: nested-sum expansion of the column entries (iota, gamma)
// of the gamma-th idempotent (iota <= gamma), enumerated over increasing
// chains iota < k_1 < ... < k_v < gamma. This is the closed form of the
// inverse diagonalizer's columns, independent of the matrix-product route.
Rational column_entry_closed_form(const BorelMatrix<Rational>& r, int iota, int gamma) {
    if (iota == gamma) return Rational(1);
    const Rational rgg = r(gamma, gamma);
    Rational total = r(iota, gamma) / (rgg - r(iota, iota));
    const int width = gamma - iota - 1;
    for (unsigned mask = 1; mask < (1u << width); ++mask) {
        std::vector<int> chain;
        for (int b = 0; b < width; ++b) {
            if (mask & (1u << b)) chain.push_back(iota + 1 + b);
        }
        Rational term = r(iota, chain.front()) * r(chain.back(), gamma) /
                        ((rgg - r(chain.back(), chain.back())) * (rgg - r(iota, iota)));
        for (std::size_t u = 0; u + 1 < chain.size(); ++u) {
            term *= r(chain[u], chain[u + 1]) / (rgg - r(chain[u], chain[u]));
        }
        total += term;
    }
    return total;
}

} // namespace

TEST_CASE("inverse columns match their nested-sum expansion") {
    SplitMix64 rng(211);
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const BorelMatrix<Rational> r = random_rss_borel(rng, n, 10);
            const std::vector<Rational> d = random_invertible_diagonal(rng, n, 10);
            const auto [b, b_inv] = diagonalizing_borel(r, d);
            for (int gamma = 0; gamma < n; ++gamma) {
                for (int iota = 0; iota <= gamma; ++iota) {
                    CHECK(b_inv(iota, gamma) ==
                          column_entry_closed_form(r, iota, gamma) / d[gamma]);
                }
            }
        }
    }
}

TEST_CASE("worked 2x2 diagonalizer") {
    const BorelMatrix<Rational> r(mat2(1, 1, 0, 2));
    const auto [b, b_inv] = diagonalizing_borel(r);
    CHECK(b.matrix() == mat2(1, -1, 0, 1));
    CHECK(b_inv.matrix() == mat2(1, 1, 0, 1));
    CHECK(b.matrix() * r.matrix() * b_inv.matrix() ==
          Matrix<Rational>::diagonal({Rational(1), Rational(2)}));
}

TEST_CASE("diagonal input is already diagonalized") {
    const BorelMatrix<Rational> r(Matrix<Rational>::diagonal({Rational(3), Rational(-2)}));
    const auto [b, b_inv] = diagonalizing_borel(r);
    CHECK(b.matrix() == Matrix<Rational>::identity(2));
    CHECK(b_inv.matrix() == Matrix<Rational>::identity(2));
}

TEST_CASE("free diagonal changes b but not the conjugate") {
    SplitMix64 rng(89);
    for (int n = 2; n <= 6; ++n) {
        const BorelMatrix<Rational> r = random_rss_borel(rng, n, 10);
        const std::vector<Rational> d = random_invertible_diagonal(rng, n, 10);
        const auto [bu, bu_inv] = diagonalizing_borel(r);
        const auto [bd, bd_inv] = diagonalizing_borel(r, d);
        CHECK(bd.matrix() * bd_inv.matrix() == Matrix<Rational>::identity(n));
        CHECK(bd.matrix() * r.matrix() * bd_inv.matrix() ==
              bu.matrix() * r.matrix() * bu_inv.matrix());
        for (int k = 0; k < n; ++k) CHECK(bd(k, k) == d[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("diagonalizer rejects bad input") {
    CHECK_THROWS_AS(diagonalizing_borel(BorelMatrix<Rational>(mat2(1, 5, 0, 1))),
                    NotRegularSemisimpleError);
    CHECK_THROWS_AS(
        diagonalizing_borel(BorelMatrix<Rational>(mat2(1, 1, 0, 2)), {Rational(1), Rational(0)}),
        SingularMatrixError);
}

TEST_CASE("dual diagonal after diagonalizing equals the idempotent traces") {
    SplitMix64 rng(97);
    for (int n = 2; n <= 6; ++n) {
        const BorelMatrix<Rational> r = random_rss_borel(rng, n, 10);
        const DualBorelMatrix<Rational> s = random_dual_borel(rng, n, 10);
        const std::vector<Rational> d = random_invertible_diagonal(rng, n, 10);
        const auto [b, b_inv] = diagonalizing_borel(r, d);
        const DualBorelMatrix<Rational> acted =
            project_to_dual(b.matrix() * s.matrix() * b_inv.matrix());
        for (int iota = 0; iota < n; ++iota) {
            CHECK(acted(iota, iota) == (idempotent(r, iota).m * s.matrix()).trace());
        }
    }
}

TEST_CASE("recipe exponents") {
    CHECK(limit_exponents({Rational(0), Rational(1)}, {Rational(1), Rational(0)}) ==
          OneParamSubgroup{{-1, 1}});
    CHECK(limit_exponents({Rational(0), Rational(0)}, {Rational(0), Rational(0)}) ==
          OneParamSubgroup{{0, 0}});
    CHECK(limit_exponents({Rational(1), Rational(0), Rational(0)},
                          {Rational(0), Rational(0), Rational(5)}) ==
          OneParamSubgroup{{1, 0, -1}});
    CHECK_THROWS_AS(limit_exponents({Rational(1)}, {Rational(1)}), InvalidFiberPointError);
}

TEST_CASE("worked 2x2 orbit limit") {
    const OrbitLimit ol = orbit_limit(running_example());
    CHECK(ol.lambda == OneParamSubgroup{{-1, 1}});
    // The subdiagonal dual entry scales as t^2, the vector and covector as t.
    CHECK(ol.curve.s.matrix()(1, 0) == LaurentPoly::monomial(Rational(-1), 2));
    CHECK(ol.curve.i[0].is_zero());
    CHECK(ol.curve.i[1] == LaurentPoly::t(1));
    CHECK(ol.curve.j[0] == LaurentPoly::t(1));
    CHECK(ol.curve.j[1].is_zero());
    CHECK(ol.point.r.matrix() == Matrix<Rational>::diagonal({Rational(1), Rational(2)}));
    CHECK(ol.point.s.matrix() == Matrix<Rational>::diagonal({Rational(1), Rational(-1)}));
    CHECK(is_zero_vector(ol.point.i));
    CHECK(is_zero_vector(ol.point.j));
}

TEST_CASE("closed-orbit representatives are limit fixed points") {
    const std::vector<Rational> zero{Rational(0), Rational(0)};
    const Quad rep(BorelMatrix<Rational>(Matrix<Rational>::diagonal({Rational(1), Rational(2)})),
                   DualBorelMatrix<Rational>(Matrix<Rational>::diagonal({Rational(1), Rational(-1)})),
                   zero, zero);
    const OrbitLimit ol = orbit_limit(rep);
    CHECK(ol.point == rep);
    CHECK(ol.lambda == OneParamSubgroup{{0, 0}});
}

TEST_CASE("limits are orbit invariants") {
    SplitMix64 rng(101);
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            const Quad q = generate_instance(n, rng.next(), GenMode::Fiber, 10);
            const BorelMatrix<Rational> b = random_invertible_borel(rng, n, 10);
            const OrbitLimit ol = orbit_limit(q);
            CHECK(orbit_limit(borel_act(b, q)).point == ol.point);
            const Matrix<Rational>& rl = ol.point.r.matrix();
            const Matrix<Rational>& sl = ol.point.s.matrix();
            CHECK(project_to_dual(rl * sl - sl * rl).is_zero());
            CHECK(one_param_act(ol.lambda, ol.point) == to_laurent(ol.point));
            for (int iota = 0; iota < n; ++iota) {
                CHECK(ol.point.s(iota, iota) == invariant_G(q, iota));
            }
        }
    }
}

TEST_CASE("the subgroup leaves free dual diagonals untouched") {
    SplitMix64 rng(103);
    const Quad q = generate_instance(4, rng.next(), GenMode::Fiber, 10);
    const OrbitLimit ol = orbit_limit(q);
    for (int k = 0; k < 4; ++k) {
        CHECK(ol.curve.s.matrix()(k, k).is_constant());
    }
}

TEST_CASE("limits at n = 1") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Quad q = generate_instance(1, seed, GenMode::Fiber, 10);
        const OrbitLimit ol = orbit_limit(q);
        CHECK(ol.point.r == q.r);
        CHECK(ol.point.s(0, 0) == q.s(0, 0));
        CHECK(is_zero_vector(ol.point.i));
        CHECK(is_zero_vector(ol.point.j));
    }
}

TEST_CASE("limits require fiber membership") {
    const Quad off(BorelMatrix<Rational>(mat2(1, 1, 0, 2)),
                   DualBorelMatrix<Rational>(mat2(0, 0, -1, 0)),
                   {Rational(1), Rational(1)}, {Rational(1), Rational(1)});
    CHECK_THROWS_AS(orbit_limit(off), DomainError);
}
