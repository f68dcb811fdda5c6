#include "borelred/borel_action.hpp"

#include "borelred/idempotents.hpp"

namespace borelred {

std::pair<BorelMatrix<Rational>, BorelMatrix<Rational>> diagonalizing_borel(
    const BorelMatrix<Rational>& r, const std::vector<Rational>& d) {
    const int n = r.dim();
    if (static_cast<int>(d.size()) != n) throw DimensionError("diagonal size mismatch");
    for (const Rational& v : d) {
        if (v.is_zero()) throw SingularMatrixError("free diagonal must be invertible");
    }
    const std::vector<Idempotent<Rational>> fam = idempotent_family(r);
    Matrix<Rational> b(n), binv(n);
    for (int iota = 0; iota < n; ++iota) {
        const auto& L = fam[static_cast<std::size_t>(iota)].m;
        const Rational dinv = d[static_cast<std::size_t>(iota)].inverse();
        for (int g = 0; g < n; ++g) {
            b(iota, g) = d[static_cast<std::size_t>(iota)] * L(iota, g);
            binv(g, iota) = L(g, iota) * dinv;
        }
    }
    BorelMatrix<Rational> bb(std::move(b));
    BorelMatrix<Rational> bi(std::move(binv));
    if (!(bb.matrix() * bi.matrix() == Matrix<Rational>::identity(n))) {
        throw InternalError("diagonalizer inverse identity failed");
    }
    const Matrix<Rational> conj = bb.matrix() * r.matrix() * bi.matrix();
    if (!(conj == Matrix<Rational>::diagonal(r.matrix().diagonal_entries()))) {
        throw InternalError("diagonalizer did not diagonalize its input");
    }
    return {std::move(bb), std::move(bi)};
}

std::pair<BorelMatrix<Rational>, BorelMatrix<Rational>> diagonalizing_borel(
    const BorelMatrix<Rational>& r) {
    return diagonalizing_borel(
        r, std::vector<Rational>(static_cast<std::size_t>(r.dim()), Rational(1)));
}

OneParamSubgroup limit_exponents(const std::vector<Rational>& i_prime,
                                 const std::vector<Rational>& j_prime) {
    if (i_prime.size() != j_prime.size()) throw DimensionError("vector/covector size mismatch");
    OneParamSubgroup lambda;
    lambda.exponents.reserve(i_prime.size());
    for (std::size_t k = 0; k < i_prime.size(); ++k) {
        const bool iv = !i_prime[k].is_zero();
        const bool jv = !j_prime[k].is_zero();
        if (iv && jv) {
            throw InvalidFiberPointError(
                "coordinate " + std::to_string(k + 1) +
                " has both vector and covector entries nonzero");
        }
        lambda.exponents.push_back(iv ? 1 : (jv ? -1 : 0));
    }
    return lambda;
}

namespace {

Matrix<LaurentPoly> laurent_matrix(const Matrix<Rational>& m) {
    Matrix<LaurentPoly> out(m.dim());
    for (int a = 0; a < m.dim(); ++a) {
        for (int b = 0; b < m.dim(); ++b) out(a, b) = LaurentPoly(m(a, b));
    }
    return out;
}

std::vector<LaurentPoly> laurent_vector(const std::vector<Rational>& v) {
    std::vector<LaurentPoly> out;
    out.reserve(v.size());
    for (const Rational& c : v) out.emplace_back(c);
    return out;
}

bool has_pole(const LaurentPoly& f) { return !f.is_zero() && f.min_exponent() < 0; }

Rational entry_limit(const LaurentPoly& f) { return f.limit_at_zero(); }

} // namespace

LaurentQuad to_laurent(const Quad& q) {
    return LaurentQuad(BorelMatrix<LaurentPoly>(laurent_matrix(q.r.matrix())),
                       DualBorelMatrix<LaurentPoly>(laurent_matrix(q.s.matrix())),
                       laurent_vector(q.i), laurent_vector(q.j));
}

LaurentQuad one_param_act(const OneParamSubgroup& lambda, const Quad& q) {
    const int n = q.dim();
    if (lambda.dim() != n) throw DimensionError("one-parameter subgroup dimension mismatch");
    Matrix<LaurentPoly> lam(n), lam_inv(n);
    for (int k = 0; k < n; ++k) {
        lam(k, k) = LaurentPoly::t(lambda.exponents[static_cast<std::size_t>(k)]);
        lam_inv(k, k) = LaurentPoly::t(-lambda.exponents[static_cast<std::size_t>(k)]);
    }
    const Matrix<LaurentPoly> r = laurent_matrix(q.r.matrix());
    const Matrix<LaurentPoly> s = laurent_matrix(q.s.matrix());
    return LaurentQuad(BorelMatrix<LaurentPoly>(lam * r * lam_inv),
                       project_to_dual(lam * s * lam_inv),
                       lam * laurent_vector(q.i),
                       laurent_vector(q.j) * lam_inv);
}

OrbitLimit orbit_limit(const Quad& q) {
    if (!in_zero_fiber_rss(q)) {
        throw DomainError("orbit limits are defined on the regular semisimple zero fiber");
    }
    const int n = q.dim();
    const auto [b, binv] = diagonalizing_borel(q.r);
    const Quad diag = borel_act(b, q);
    const OneParamSubgroup lambda = limit_exponents(diag.i, diag.j);
    const LaurentQuad curve = one_param_act(lambda, diag);

    Matrix<Rational> r_lim(n), s_lim(n);
    std::vector<Rational> i_lim, j_lim;
    for (int a = 0; a < n; ++a) {
        for (int c = 0; c < n; ++c) {
            if (has_pole(curve.r.matrix()(a, c)) || has_pole(curve.s.matrix()(a, c))) {
                throw LimitDoesNotExistError("negative weight on the zero fiber");
            }
            r_lim(a, c) = entry_limit(curve.r.matrix()(a, c));
            s_lim(a, c) = entry_limit(curve.s.matrix()(a, c));
        }
    }
    for (int k = 0; k < n; ++k) {
        if (has_pole(curve.i[static_cast<std::size_t>(k)]) ||
            has_pole(curve.j[static_cast<std::size_t>(k)])) {
            throw LimitDoesNotExistError("negative weight on the zero fiber");
        }
        i_lim.push_back(entry_limit(curve.i[static_cast<std::size_t>(k)]));
        j_lim.push_back(entry_limit(curve.j[static_cast<std::size_t>(k)]));
    }
    Quad point(BorelMatrix<Rational>(std::move(r_lim)),
               DualBorelMatrix<Rational>(std::move(s_lim)), std::move(i_lim), std::move(j_lim));

    if (!is_zero_vector(point.i) || !is_zero_vector(point.j) ||
        !point.r.matrix().is_diagonal() || !point.s.matrix().is_diagonal()) {
        throw InternalError("orbit limit is not a closed-orbit representative");
    }
    if (!(point.r.matrix() == Matrix<Rational>::diagonal(q.r.matrix().diagonal_entries()))) {
        throw InternalError("orbit limit moved the eigenvalues");
    }
    for (int iota = 0; iota < n; ++iota) {
        const Idempotent<Rational> L = idempotent(q.r, iota);
        if (!(point.s(iota, iota) == (L.m * q.s.matrix()).trace())) {
            throw InternalError("orbit limit dual diagonal disagrees with tr(L s)");
        }
    }
    return OrbitLimit{std::move(point), lambda, std::move(curve)};
}

} // namespace borelred
