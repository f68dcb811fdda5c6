#include <catch2/catch_amalgamated.hpp>

#include "borelred/idempotents.hpp"
#include "borelred/instance_gen.hpp"

using namespace borelred;

namespace {

Matrix<Rational> mat2(long a, long b, long c, long d) {
    Matrix<Rational> m(2);
    m(0, 0) = Rational(a); m(0, 1) = Rational(b);
    m(1, 0) = Rational(c); m(1, 1) = Rational(d);
    return m;
}

const BorelMatrix<Rational> kR(mat2(1, 1, 0, 2));

} // namespace

TEST_CASE("2x2 idempotents against direct arithmetic") {
    // Independent route: (r - 2I) / tr(r - 2I) computed entrywise here.
    Matrix<Rational> shifted = kR.matrix();
    shifted(0, 0) -= Rational(2);
    shifted(1, 1) -= Rational(2);
    const Rational tau = shifted.trace();
    CHECK(tau == Rational(-1));
    CHECK(idempotent(kR, 0).m == shifted.scaled(tau.inverse()));

    CHECK(idempotent(kR, 0).m == mat2(1, -1, 0, 0));
    CHECK(idempotent(kR, 1).m == mat2(0, 1, 0, 1));
}

TEST_CASE("diagonal input collapses to elementary projectors") {
    const Matrix<Rational> d3 =
        Matrix<Rational>::diagonal({Rational(2), Rational(-1), Rational(5)});
    const BorelMatrix<Rational> r(d3);
    for (int iota = 0; iota < 3; ++iota) {
        Matrix<Rational> e(3);
        e(iota, iota) = Rational(1);
        CHECK(idempotent(r, iota).m == e);
    }
}

TEST_CASE("empty product convention at n = 1") {
    Matrix<Rational> one(1);
    one(0, 0) = Rational(7);
    const auto fam = idempotent_family(BorelMatrix<Rational>(one));
    REQUIRE(fam.size() == 1);
    CHECK(fam[0].m == Matrix<Rational>::identity(1));
}

TEST_CASE("family sums to the identity") {
    CHECK(idempotent(kR, 0).m + idempotent(kR, 1).m == Matrix<Rational>::identity(2));
    SplitMix64 rng(61);
    for (int n = 2; n <= 6; ++n) {
        const auto fam = idempotent_family(random_rss_borel(rng, n, 10));
        Matrix<Rational> sum(n);
        for (const auto& L : fam) sum = sum + L.m;
        CHECK(sum == Matrix<Rational>::identity(n));
    }
}

TEST_CASE("repeated eigenvalues are rejected") {
    CHECK_THROWS_AS(idempotent(BorelMatrix<Rational>(mat2(1, 5, 0, 1)), 0),
                    NotRegularSemisimpleError);
    CHECK_THROWS_AS(idempotent(kR, 2), DimensionError);
    CHECK_THROWS_AS(idempotent(kR, -1), DimensionError);
}

TEST_CASE("algebraic laws on random instances") {
    SplitMix64 rng(67);
    for (int n = 2; n <= 5; ++n) {
        for (int trial = 0; trial < 12; ++trial) {
            const BorelMatrix<Rational> r = random_rss_borel(rng, n, 10);
            const DualBorelMatrix<Rational> s = random_dual_borel(rng, n, 10);
            const auto fam = idempotent_family(r);
            const Matrix<Rational> zero(n);
            for (int a = 0; a < n; ++a) {
                CHECK(fam[a].m * fam[a].m == fam[a].m);
                CHECK(fam[a].m.trace() == Rational(1));
                for (int b = 0; b < n; ++b) {
                    if (a != b) CHECK(fam[a].m * fam[b].m == zero);
                }
                const Matrix<Rational> lr = fam[a].m * r.matrix();
                CHECK(lr == r.matrix() * fam[a].m);
                for (int g = 0; g < n; ++g) {
                    CHECK(lr(g, g) == r(a, a) * fam[a].m(g, g));
                    for (int c = 0; c < n; ++c) {
                        if (g > a || c < a) {
                            CHECK(fam[a].m(g, c).is_zero());
                            CHECK(lr(g, c).is_zero());
                        }
                    }
                }
                const Matrix<Rational> ls = fam[a].m * s.matrix();
                for (int g = a + 1; g < n; ++g) {
                    for (int c = 0; c < n; ++c) CHECK(ls(g, c).is_zero());
                }
            }
        }
    }
}

TEST_CASE("conjugation equivariance") {
    SplitMix64 rng(71);
    for (int n = 2; n <= 6; ++n) {
        const BorelMatrix<Rational> r = random_rss_borel(rng, n, 10);
        const BorelMatrix<Rational> d = random_invertible_borel(rng, n, 10);
        const Matrix<Rational> dinv = upper_triangular_inverse(d.matrix());
        const BorelMatrix<Rational> rd(d.matrix() * r.matrix() * dinv);
        for (int iota = 0; iota < n; ++iota) {
            CHECK(idempotent(rd, iota).m == d.matrix() * idempotent(r, iota).m * dinv);
        }
    }
}

TEST_CASE("scaling the input leaves the idempotents unchanged") {
    SplitMix64 rng(73);
    for (int n = 2; n <= 5; ++n) {
        const BorelMatrix<Rational> r = random_rss_borel(rng, n, 10);
        const Rational c = random_nonzero_rational(rng, 10);
        const BorelMatrix<Rational> rc(r.matrix().scaled(c));
        for (int iota = 0; iota < n; ++iota) {
            CHECK(idempotent(rc, iota).m == idempotent(r, iota).m);
        }
    }
}

TEST_CASE("nested-sum row expansion agrees with the matrix products") {
    CHECK(idempotent_row_entry_closed_form(kR, 0, 1) == Rational(-1));
    CHECK(idempotent_row_entry_closed_form(kR, 1, 1) == Rational(1));
    SplitMix64 rng(79);
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const BorelMatrix<Rational> r = random_rss_borel(rng, n, 10);
            for (int iota = 0; iota < n; ++iota) {
                const Idempotent<Rational> L = idempotent(r, iota);
                for (int g = iota; g < n; ++g) {
                    CHECK(idempotent_row_entry_closed_form(r, iota, g) == L.m(iota, g));
                }
            }
        }
    }
    CHECK_THROWS_AS(idempotent_row_entry_closed_form(kR, 1, 0), DimensionError);
}

TEST_CASE("the shift factors commute, so the product order is irrelevant") {
    SplitMix64 rng(83);
    for (int n = 2; n <= 6; ++n) {
        const BorelMatrix<Rational> r = random_rss_borel(rng, n, 10);
        for (int iota = 0; iota < n; ++iota) {
            Matrix<Rational> prod = Matrix<Rational>::identity(n);
            for (int k = n - 1; k >= 0; --k) {
                if (k == iota) continue;
                Matrix<Rational> f = r.matrix();
                for (int d = 0; d < n; ++d) f(d, d) -= r(k, k);
                prod = prod * f;
            }
            CHECK(prod.scaled(idempotent_normalizer(r, iota).inverse()) == idempotent(r, iota).m);
        }
    }
}
