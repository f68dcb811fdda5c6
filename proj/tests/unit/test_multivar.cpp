#include <catch2/catch_amalgamated.hpp>

#include "borelred/multivar.hpp"
#include "borelred/rng.hpp"

using namespace borelred;

namespace {

Poly random_poly(SplitMix64& rng, int terms, int max_coeff) {
    const VarId vars[] = {VarId::r(0, 0), VarId::r(0, 1), VarId::r(1, 1), VarId::x(0), VarId::y(0)};
    Poly p;
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (const VarId& v : vars) {
            m = m * Monomial::var(v, static_cast<int>(rng.below(3)));
        }
        p += Poly::term(random_rational(rng, max_coeff), m);
    }
    return p;
}

Poly random_nonzero_poly(SplitMix64& rng, int terms, int max_coeff) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        Poly p = random_poly(rng, terms, max_coeff);
        if (!p.is_zero()) return p;
    }
    return Poly(1);
}

} // namespace

TEST_CASE("variable names order lexicographically") {
    CHECK(VarId::r(0, 0).name() == "r11");
    CHECK(VarId::r(0, 1).name() == "r12");
    CHECK(VarId::x(1).name() == "x2");
    CHECK(VarId::y(0).name() == "y1");
    CHECK(VarId::r(1, 2) < VarId::x(0));
    CHECK(VarId::x(3) < VarId::y(0));
}

TEST_CASE("monomial gcd and division") {
    const Monomial a = Monomial::var(VarId::x(0), 2) * Monomial::var(VarId::y(0), 1);
    const Monomial b = Monomial::var(VarId::x(0), 1) * Monomial::var(VarId::y(0), 2);
    const Monomial g = Monomial::gcd(a, b);
    CHECK(g == Monomial::var(VarId::x(0), 1) * Monomial::var(VarId::y(0), 1));
    CHECK(a.divided_by(g) == Monomial::var(VarId::x(0), 1));
    CHECK_THROWS_AS(g.divided_by(a), Error);
    CHECK(a.str() == "x1^2*y1");
}

TEST_CASE("polynomial evaluation") {
    // p = 2 r11 x1 - 3 y1^2
    const Poly p = Poly::term(Rational(2), Monomial::var(VarId::r(0, 0)) * Monomial::var(VarId::x(0)))
                 + Poly::term(Rational(-3), Monomial::var(VarId::y(0), 2));
    std::map<VarId, Rational> at{{VarId::r(0, 0), Rational(5)},
                                 {VarId::x(0), Rational(1, 2)},
                                 {VarId::y(0), Rational(2)}};
    CHECK(p.eval(at) == Rational(-7));
    at.erase(VarId::y(0));
    CHECK_THROWS_AS(p.eval(at), Error);
}

TEST_CASE("homogeneous degree") {
    CHECK(Poly(0).homogeneous_degree() == 0);
    CHECK(Poly::var(VarId::x(0)).homogeneous_degree() == 1);
    const Poly mixed = Poly::var(VarId::x(0)) + Poly(1);
    CHECK(!mixed.homogeneous_degree().has_value());
}

TEST_CASE("unreduced fractions compare equal by cross multiplication") {
    const Poly x = Poly::var(VarId::x(0));
    const Poly y = Poly::var(VarId::y(0));
    const MultiRational lhs(x * x - y * y, x - y);
    const MultiRational rhs(x + y);
    CHECK(lhs == rhs);
    CHECK(!(lhs == MultiRational(x - y)));
}

TEST_CASE("normalization cancels monomial content and fixes the sign") {
    const Poly x = Poly::var(VarId::x(0));
    const Poly y = Poly::var(VarId::y(0));
    const MultiRational f(x * x * y, x * y * y);
    CHECK(f.num() == x);
    CHECK(f.den() == y);
    const MultiRational g(Poly(1), -x);
    CHECK(g.den() == x);
    CHECK(g.num() == Poly(-1));
    CHECK_THROWS_AS(MultiRational(x, Poly(0)), DivisionByZeroError);
}

TEST_CASE("equality is an equivalence relation across representatives") {
    SplitMix64 rng(37);
    for (int k = 0; k < 60; ++k) {
        const Poly p = random_poly(rng, 3, 8);
        const Poly q = random_nonzero_poly(rng, 3, 8);
        const Poly s = random_nonzero_poly(rng, 2, 8);
        const Poly t = random_nonzero_poly(rng, 2, 8);
        const MultiRational a(p, q);
        const MultiRational b(p * s, q * s);
        const MultiRational c(p * s * t, q * s * t);
        CHECK(a == a);
        CHECK(a == b);
        CHECK(b == a);
        CHECK(b == c);
        CHECK(a == c);
    }
}

TEST_CASE("field identities") {
    SplitMix64 rng(41);
    for (int k = 0; k < 60; ++k) {
        const MultiRational a(random_poly(rng, 2, 8), random_nonzero_poly(rng, 2, 8));
        const MultiRational b(random_poly(rng, 2, 8), random_nonzero_poly(rng, 2, 8));
        CHECK((a + b) - b == a);
        CHECK(a * b == b * a);
        if (!b.is_zero()) {
            CHECK((a * b) / b == a);
            CHECK((b / b).is_one());
        }
    }
    CHECK_THROWS_AS(MultiRational(1) / MultiRational(0), DivisionByZeroError);
}

TEST_CASE("weight-zero detection") {
    const Poly r12 = Poly::var(VarId::r(0, 1));
    const Poly diff = Poly::var(VarId::r(0, 0)) - Poly::var(VarId::r(1, 1));
    CHECK(MultiRational(r12, diff).is_weight_zero());
    CHECK(MultiRational(Rational(3)).is_weight_zero());
    CHECK(!MultiRational(r12 + Poly(1), diff).is_weight_zero());
    CHECK(!MultiRational(r12 * r12, diff).is_weight_zero());
}

TEST_CASE("evaluation of fractions") {
    const Poly r12 = Poly::var(VarId::r(0, 1));
    const Poly diff = Poly::var(VarId::r(0, 0)) - Poly::var(VarId::r(1, 1));
    const MultiRational z(r12, diff);
    const std::map<VarId, Rational> at{{VarId::r(0, 0), Rational(1)},
                                       {VarId::r(0, 1), Rational(1)},
                                       {VarId::r(1, 1), Rational(2)}};
    CHECK(z.eval(at) == Rational(-1));
    const std::map<VarId, Rational> collide{{VarId::r(0, 0), Rational(2)},
                                            {VarId::r(0, 1), Rational(1)},
                                            {VarId::r(1, 1), Rational(2)}};
    CHECK_THROWS_AS(z.eval(collide), DivisionByZeroError);
}

TEST_CASE("fraction rendering") {
    const Poly r12 = Poly::var(VarId::r(0, 1));
    const Poly diff = Poly::var(VarId::r(0, 0)) - Poly::var(VarId::r(1, 1));
    CHECK(MultiRational(r12, diff).str() == "(r12)/(r11 - r22)");
    CHECK(MultiRational(Rational(1, 2)).str() == "1/2");
}
