#include "borelred/moment_map.hpp"

#include "borelred/rng.hpp"

namespace borelred {

DualBorelMatrix<Rational> moment(const Quad& q) {
    const Matrix<Rational>& r = q.r.matrix();
    const Matrix<Rational>& s = q.s.matrix();
    return project_to_dual(r * s - s * r + outer(q.i, q.j));
}

bool in_zero_fiber_rss(const Quad& q) {
    return is_regular_semisimple(q.r) && moment(q).is_zero();
}

DualBorelMatrix<Rational> solve_subdiagonal_s(const BorelMatrix<Rational>& r,
                                              const std::vector<Rational>& i,
                                              const std::vector<Rational>& j,
                                              const std::vector<Rational>& diag_s) {
    const int n = r.dim();
    if (static_cast<int>(i.size()) != n || static_cast<int>(j.size()) != n ||
        static_cast<int>(diag_s.size()) != n) {
        throw DimensionError("solver input dimensions mismatch");
    }
    if (!is_regular_semisimple(r)) {
        throw NotRegularSemisimpleError("solver requires pairwise distinct diagonal entries");
    }
    Matrix<Rational> s(n);
    for (int d = 0; d < n; ++d) s(d, d) = diag_s[static_cast<std::size_t>(d)];
    // Deepest subdiagonal first; every right-hand side below is already known.
    for (int level = n - 1; level >= 1; --level) {
        for (int col = 0; col + level < n; ++col) {
            const int row = col + level;
            Rational rhs = i[static_cast<std::size_t>(row)] * j[static_cast<std::size_t>(col)];
            for (int m = row + 1; m < n; ++m) rhs += r(row, m) * s(m, col);
            for (int m = 0; m < col; ++m) rhs -= s(row, m) * r(m, col);
            s(row, col) = rhs / (r(col, col) - r(row, row));
        }
    }
    return DualBorelMatrix<Rational>(std::move(s));
}

TargetPoint::TargetPoint(std::vector<Rational> x_, std::vector<Rational> y_)
    : x(std::move(x_)), y(std::move(y_)) {
    if (x.size() != y.size() || x.empty()) {
        throw DimensionError("target coordinates must be two equal-length nonempty blocks");
    }
    for (std::size_t a = 0; a < x.size(); ++a) {
        for (std::size_t b = a + 1; b < x.size(); ++b) {
            if (x[a] == x[b]) {
                throw DomainError("target x coordinates must be pairwise distinct");
            }
        }
    }
}

std::vector<Rational> diagonal_for_target(const BorelMatrix<Rational>& r,
                                          const DualBorelMatrix<Rational>& s_lower,
                                          const std::vector<Rational>& y) {
    const int n = r.dim();
    if (s_lower.dim() != n || static_cast<int>(y.size()) != n) {
        throw DimensionError("diagonal correction dimensions mismatch");
    }
    // tr(L^iota s) splits as s_ii + (contribution of the strictly lower part
    // of s); the correction never involves the diagonal being chosen.
    Matrix<Rational> strict(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < a; ++b) strict(a, b) = s_lower(a, b);
    }
    std::vector<Rational> diag;
    diag.reserve(static_cast<std::size_t>(n));
    for (int iota = 0; iota < n; ++iota) {
        const Idempotent<Rational> L = idempotent(r, iota);
        diag.push_back(y[static_cast<std::size_t>(iota)] - (L.m * strict).trace());
    }
    return diag;
}

Quad surjectivity_witness(const TargetPoint& t, WitnessMode mode, std::uint64_t seed,
                          int max_coeff) {
    const int n = t.dim();
    const std::vector<Rational> zero(static_cast<std::size_t>(n), Rational(0));
    if (mode == WitnessMode::Diagonal) {
        return Quad(BorelMatrix<Rational>(Matrix<Rational>::diagonal(t.x)),
                    DualBorelMatrix<Rational>(Matrix<Rational>::diagonal(t.y)), zero, zero);
    }
    SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(n), 0x77697468ULL));
    Matrix<Rational> rm = Matrix<Rational>::diagonal(t.x);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) rm(a, b) = random_rational(rng, max_coeff);
    }
    const BorelMatrix<Rational> r(std::move(rm));
    std::vector<Rational> i;
    i.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) i.push_back(random_rational(rng, max_coeff));
    // j = 0 makes every diagonal moment entry vanish at once; the lower part
    // of s then solves to zero and only the diagonal correction remains.
    const DualBorelMatrix<Rational> s_lower = solve_subdiagonal_s(r, i, zero, zero);
    const std::vector<Rational> diag = diagonal_for_target(r, s_lower, t.y);
    Matrix<Rational> sm = s_lower.matrix();
    for (int d = 0; d < n; ++d) sm(d, d) = diag[static_cast<std::size_t>(d)];
    Quad q(r, DualBorelMatrix<Rational>(std::move(sm)), std::move(i), zero);
    if (!in_zero_fiber_rss(q)) {
        throw InternalError("witness construction left the zero fiber");
    }
    return q;
}

namespace {

/// Partial derivatives of the unnormalized product prod_{k != iota}
/// (r - r_kk I) with respect to r_ab, by the product rule over prefix and
/// suffix products.
Matrix<Rational> product_derivative(const BorelMatrix<Rational>& r, int iota, int a, int b) {
    const int n = r.dim();
    std::vector<Matrix<Rational>> factors;
    std::vector<int> shift_index;
    for (int k = 0; k < n; ++k) {
        if (k == iota) continue;
        Matrix<Rational> f = r.matrix();
        for (int d = 0; d < n; ++d) f(d, d) -= r(k, k);
        factors.push_back(std::move(f));
        shift_index.push_back(k);
    }
    const std::size_t m = factors.size();
    std::vector<Matrix<Rational>> prefix(m + 1, Matrix<Rational>::identity(n));
    std::vector<Matrix<Rational>> suffix(m + 1, Matrix<Rational>::identity(n));
    for (std::size_t k = 0; k < m; ++k) prefix[k + 1] = prefix[k] * factors[k];
    for (std::size_t k = m; k-- > 0;) suffix[k] = factors[k] * suffix[k + 1];

    Matrix<Rational> deriv(n);
    for (std::size_t k = 0; k < m; ++k) {
        Matrix<Rational> dfactor(n);
        dfactor(a, b) += Rational(1);
        if (a == b && a == shift_index[k]) {
            for (int d = 0; d < n; ++d) dfactor(d, d) -= Rational(1);
        }
        deriv = deriv + prefix[k] * dfactor * suffix[k + 1];
    }
    return deriv;
}

} // namespace

std::vector<std::vector<Rational>> moment_diagonal_jacobian(const Quad& q) {
    const int n = q.dim();
    if (!is_regular_semisimple(q.r)) {
        throw NotRegularSemisimpleError("jacobian requires pairwise distinct diagonal entries");
    }
    std::vector<std::vector<Rational>> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int iota = 0; iota < n; ++iota) {
        const Rational tau = idempotent_normalizer(q.r, iota);
        const Idempotent<Rational> L = idempotent(q.r, iota);
        std::vector<Rational> row;
        // d/d r_ab of tr(j L i) with L = P / tr(P).
        for (int a = 0; a < n; ++a) {
            for (int b = a; b < n; ++b) {
                const Matrix<Rational> dP = product_derivative(q.r, iota, a, b);
                const Rational dtau = dP.trace();
                const Matrix<Rational> dL = dP.scaled(tau.inverse()) - L.m.scaled(dtau / tau);
                row.push_back(bilinear(q.j, dL, q.i));
            }
        }
        const std::vector<Rational> jL = q.j * L.m;
        const std::vector<Rational> Li = L.m * q.i;
        for (int k = 0; k < n; ++k) row.push_back(jL[static_cast<std::size_t>(k)]);
        for (int k = 0; k < n; ++k) row.push_back(Li[static_cast<std::size_t>(k)]);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace borelred
