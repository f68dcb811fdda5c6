#include <catch2/catch_amalgamated.hpp>

#include "borelred/laurent.hpp"
#include "borelred/rng.hpp"

using namespace borelred;

namespace {

LaurentPoly random_laurent(SplitMix64& rng, int min_exp, int max_exp, int max_coeff) {
    LaurentPoly f;
    for (int e = min_exp; e <= max_exp; ++e) {
        if (rng.coin()) f += LaurentPoly::monomial(random_rational(rng, max_coeff), e);
    }
    return f;
}

} // namespace

TEST_CASE("limits at zero") {
    // -t^2 is the weight the subdiagonal dual entry picks up along the
    // recipe's subgroup in the 2x2 worked example.
    CHECK(laurent_limit_at_zero(LaurentPoly::monomial(Rational(-1), 2)) == Rational(0));
    CHECK(laurent_limit_at_zero(LaurentPoly(Rational(5))) == Rational(5));
    CHECK_THROWS_AS(laurent_limit_at_zero(LaurentPoly::t(-1)), LimitDoesNotExistError);
    CHECK(laurent_limit_at_zero(LaurentPoly()) == Rational(0));
    CHECK(laurent_limit_at_zero(LaurentPoly::t(3) + LaurentPoly::t(1)) == Rational(0));
    CHECK(laurent_limit_at_zero(LaurentPoly(Rational(2)) + LaurentPoly::t(1)) == Rational(2));
}

TEST_CASE("limit is multiplicative on pole-free factors") {
    SplitMix64 rng(23);
    for (int k = 0; k < 200; ++k) {
        const LaurentPoly f = random_laurent(rng, 0, 4, 10);
        const LaurentPoly g = random_laurent(rng, 0, 4, 10);
        CHECK(laurent_limit_at_zero(f * g) ==
              laurent_limit_at_zero(f) * laurent_limit_at_zero(g));
    }
}

TEST_CASE("multiplication is degree additive") {
    SplitMix64 rng(29);
    for (int k = 0; k < 200; ++k) {
        const LaurentPoly f = random_laurent(rng, -3, 3, 10);
        const LaurentPoly g = random_laurent(rng, -3, 3, 10);
        if (f.is_zero() || g.is_zero()) {
            CHECK((f * g).is_zero());
            continue;
        }
        CHECK((f * g).min_exponent() == f.min_exponent() + g.min_exponent());
        CHECK((f * g).max_exponent() == f.max_exponent() + g.max_exponent());
    }
}

TEST_CASE("ring identities") {
    SplitMix64 rng(31);
    for (int k = 0; k < 100; ++k) {
        const LaurentPoly f = random_laurent(rng, -2, 2, 10);
        const LaurentPoly g = random_laurent(rng, -2, 2, 10);
        const LaurentPoly h = random_laurent(rng, -2, 2, 10);
        CHECK((f + g) - g == f);
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * g == g * f);
    }
}

TEST_CASE("no stored zero coefficients") {
    const LaurentPoly f = LaurentPoly::t(2) - LaurentPoly::t(2);
    CHECK(f.is_zero());
    CHECK(f.terms().empty());
    CHECK(LaurentPoly::monomial(Rational(0), 5).is_zero());
}

TEST_CASE("laurent rendering") {
    const LaurentPoly f = LaurentPoly::monomial(Rational(5), -1) + LaurentPoly(Rational(3)) +
                          LaurentPoly::t(2);
    CHECK(f.str() == "5*t^-1 + 3 + t^2");
    CHECK(LaurentPoly().str() == "0");
}
