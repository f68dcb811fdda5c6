#include "borelred/instance_gen.hpp"

#include "borelred/idempotents.hpp"

namespace borelred {

std::vector<Rational> random_vector(SplitMix64& rng, int n, int max_coeff) {
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) v.push_back(random_rational(rng, max_coeff));
    return v;
}

BorelMatrix<Rational> random_rss_borel(SplitMix64& rng, int n, int max_coeff) {
    for (int attempt = 0; attempt < kRejectionLimit; ++attempt) {
        Matrix<Rational> m(n);
        bool distinct = true;
        for (int d = 0; d < n; ++d) {
            m(d, d) = random_rational(rng, max_coeff);
            for (int e = 0; e < d; ++e) distinct = distinct && !(m(d, d) == m(e, e));
        }
        if (!distinct) continue;
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) m(a, b) = random_rational(rng, max_coeff);
        }
        return BorelMatrix<Rational>(std::move(m));
    }
    throw Error("rejection sampling failed to produce distinct diagonal entries");
}

BorelMatrix<Rational> random_invertible_borel(SplitMix64& rng, int n, int max_coeff) {
    Matrix<Rational> m(n);
    for (int d = 0; d < n; ++d) m(d, d) = random_nonzero_rational(rng, max_coeff);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) m(a, b) = random_rational(rng, max_coeff);
    }
    return BorelMatrix<Rational>(std::move(m));
}

DualBorelMatrix<Rational> random_dual_borel(SplitMix64& rng, int n, int max_coeff) {
    Matrix<Rational> m(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b <= a; ++b) m(a, b) = random_rational(rng, max_coeff);
    }
    return DualBorelMatrix<Rational>(std::move(m));
}

std::vector<Rational> random_invertible_diagonal(SplitMix64& rng, int n, int max_coeff) {
    std::vector<Rational> d;
    d.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) d.push_back(random_nonzero_rational(rng, max_coeff));
    return d;
}

TargetPoint random_target(SplitMix64& rng, int n, int max_coeff) {
    for (int attempt = 0; attempt < kRejectionLimit; ++attempt) {
        std::vector<Rational> x = random_vector(rng, n, max_coeff);
        bool distinct = true;
        for (std::size_t a = 0; a < x.size() && distinct; ++a) {
            for (std::size_t b = a + 1; b < x.size(); ++b) distinct = distinct && !(x[a] == x[b]);
        }
        if (!distinct) continue;
        return TargetPoint(std::move(x), random_vector(rng, n, max_coeff));
    }
    throw Error("rejection sampling failed to produce distinct target coordinates");
}

namespace {

struct FiberFraming {
    std::vector<bool> in_s;
    std::vector<Rational> i, j;
};

/// Splits the index set: the sum of ranges of the idempotents outside S
/// carries i, the sum of those inside S carries j. Every tr(j L^iota i) then
/// vanishes by orthogonality.
FiberFraming draw_fiber_framing(SplitMix64& rng, const std::vector<Idempotent<Rational>>& fam,
                                int n, int max_coeff) {
    FiberFraming out;
    out.in_s.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) out.in_s[static_cast<std::size_t>(k)] = rng.coin();
    Matrix<Rational> inside(n), outside(n);
    for (int k = 0; k < n; ++k) {
        if (out.in_s[static_cast<std::size_t>(k)]) {
            inside = inside + fam[static_cast<std::size_t>(k)].m;
        } else {
            outside = outside + fam[static_cast<std::size_t>(k)].m;
        }
    }
    out.i = outside * random_vector(rng, n, max_coeff);
    out.j = random_vector(rng, n, max_coeff) * inside;
    return out;
}

Quad assemble_fiber_point(SplitMix64& rng, const BorelMatrix<Rational>& r,
                          const FiberFraming& f, int max_coeff) {
    const DualBorelMatrix<Rational> s =
        solve_subdiagonal_s(r, f.i, f.j, random_vector(rng, r.dim(), max_coeff));
    Quad q(r, s, f.i, f.j);
    if (!in_zero_fiber_rss(q)) {
        throw InternalError("fiber-mode instance left the zero fiber");
    }
    return q;
}

} // namespace

Quad generate_instance(int n, std::uint64_t seed, GenMode mode, int max_coeff) {
    if (n < 1) throw DimensionError("instance dimension must be at least 1");
    SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(n), 0x696e7374ULL));
    const BorelMatrix<Rational> r = random_rss_borel(rng, n, max_coeff);
    if (mode == GenMode::Free) {
        return Quad(r, random_dual_borel(rng, n, max_coeff), random_vector(rng, n, max_coeff),
                    random_vector(rng, n, max_coeff));
    }
    const std::vector<Idempotent<Rational>> fam = idempotent_family(r);
    const FiberFraming f = draw_fiber_framing(rng, fam, n, max_coeff);
    return assemble_fiber_point(rng, r, f, max_coeff);
}

Quad generate_generic_fiber_instance(int n, std::uint64_t seed, int max_coeff) {
    if (n < 1) throw DimensionError("instance dimension must be at least 1");
    SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(n), 0x67656eULL));
    const BorelMatrix<Rational> r = random_rss_borel(rng, n, max_coeff);
    const std::vector<Idempotent<Rational>> fam = idempotent_family(r);
    for (int attempt = 0; attempt < kRejectionLimit; ++attempt) {
        const FiberFraming f = draw_fiber_framing(rng, fam, n, max_coeff);
        bool generic = true;
        for (int k = 0; k < n && generic; ++k) {
            const auto& L = fam[static_cast<std::size_t>(k)].m;
            generic = f.in_s[static_cast<std::size_t>(k)] ? !is_zero_vector(f.j * L)
                                                          : !is_zero_vector(L * f.i);
        }
        if (generic) return assemble_fiber_point(rng, r, f, max_coeff);
    }
    throw Error("rejection sampling failed to reach the dense fiber stratum");
}

} // namespace borelred
