#include "borelred/invariants.hpp"

#include "borelred/idempotents.hpp"

namespace borelred {

namespace {

Matrix<Rational> shift_product(const BorelMatrix<Rational>& r, int iota) {
    const int n = r.dim();
    Matrix<Rational> prod = Matrix<Rational>::identity(n);
    for (int k = 0; k < n; ++k) {
        if (k == iota) continue;
        Matrix<Rational> f = r.matrix();
        for (int d = 0; d < n; ++d) f(d, d) -= r(k, k);
        prod = prod * f;
    }
    return prod;
}

} // namespace

Rational invariant_F(const Quad& q, int iota) {
    return bilinear(q.j, idempotent(q.r, iota).m, q.i);
}

Rational invariant_G(const Quad& q, int iota) {
    return (idempotent(q.r, iota).m * q.s.matrix()).trace();
}

Rational invariant_H(const Quad& q, int iota) {
    return (idempotent(q.r, iota).m * q.r.matrix()).trace();
}

Rational invariant_K(const Quad& q, int gamma, int nu) {
    if (!(0 <= gamma && gamma < nu && nu < q.dim())) {
        throw DimensionError("invariant K requires gamma < nu within range");
    }
    const Matrix<Rational> diff =
        idempotent(q.r, nu).m - idempotent(q.r, gamma).m;
    const Rational denom = (diff * q.r.matrix()).trace();
    return denom.inverse();
}

Rational invariant_F_trace_form(const Quad& q, int iota) {
    const Rational tau = idempotent_normalizer(q.r, iota);
    return bilinear(q.j, shift_product(q.r, iota), q.i) / tau;
}

Rational invariant_G_trace_form(const Quad& q, int iota) {
    const Rational tau = idempotent_normalizer(q.r, iota);
    return (shift_product(q.r, iota) * q.s.matrix()).trace() / tau;
}

Rational invariant_H_trace_form(const Quad& q, int iota) {
    const Rational tau = idempotent_normalizer(q.r, iota);
    return (shift_product(q.r, iota) * q.r.matrix()).trace() / tau;
}

int InvariantVector::pair_index(int n, int gamma, int nu) {
    if (!(0 <= gamma && gamma < nu && nu < n)) {
        throw DimensionError("pair index requires gamma < nu within range");
    }
    // Lexicographic position of (gamma, nu) among pairs gamma < nu.
    return gamma * (2 * n - gamma - 1) / 2 + (nu - gamma - 1);
}

Rational InvariantVector::k(int gamma, int nu) const {
    const int n = dim();
    if (gamma < nu) return K[static_cast<std::size_t>(pair_index(n, gamma, nu))];
    return -K[static_cast<std::size_t>(pair_index(n, nu, gamma))];
}

InvariantVector invariant_vector(const Quad& q) {
    const int n = q.dim();
    const std::vector<Idempotent<Rational>> fam = idempotent_family(q.r);
    InvariantVector v;
    v.F.reserve(static_cast<std::size_t>(n));
    v.G.reserve(static_cast<std::size_t>(n));
    v.H.reserve(static_cast<std::size_t>(n));
    for (int iota = 0; iota < n; ++iota) {
        const auto& L = fam[static_cast<std::size_t>(iota)].m;
        v.F.push_back(bilinear(q.j, L, q.i));
        v.G.push_back((L * q.s.matrix()).trace());
        v.H.push_back((L * q.r.matrix()).trace());
    }
    for (int gamma = 0; gamma < n; ++gamma) {
        for (int nu = gamma + 1; nu < n; ++nu) {
            const Matrix<Rational> diff =
                fam[static_cast<std::size_t>(nu)].m - fam[static_cast<std::size_t>(gamma)].m;
            const Rational denom = (diff * q.r.matrix()).trace();
            v.K.push_back(denom.inverse());
            const Rational check = v.K.back() *
                (v.H[static_cast<std::size_t>(nu)] - v.H[static_cast<std::size_t>(gamma)]);
            if (!check.is_one()) {
                throw InternalError("K * (H_nu - H_gamma) != 1");
            }
        }
    }
    return v;
}

TargetPoint quotient_map(const Quad& q) {
    if (!in_zero_fiber_rss(q)) {
        throw DomainError("quotient map is defined on the regular semisimple zero fiber");
    }
    const int n = q.dim();
    std::vector<Rational> x, y;
    x.reserve(static_cast<std::size_t>(n));
    y.reserve(static_cast<std::size_t>(n));
    for (int iota = 0; iota < n; ++iota) {
        x.push_back(invariant_H(q, iota));
        y.push_back(invariant_G(q, iota));
    }
    return TargetPoint(std::move(x), std::move(y));
}

} // namespace borelred
