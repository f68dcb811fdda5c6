#pragma once

#include <string>
#include <vector>

#include "borelred/matrix.hpp"

namespace borelred {

/// The normalized product over k != iota of (r - r_kk I), attached to an
/// upper-triangular r with pairwise distinct diagonal entries. Construction
/// validates the defining laws exactly: unit trace, idempotence, and the
/// vanishing pattern (entry (g, m) = 0 whenever g > iota or m < iota).
template <class T>
struct Idempotent {
    int iota = 0; // 0-based index of the selected diagonal entry
    Matrix<T> m;
    BorelMatrix<T> source_r;

    Idempotent(int iota_, Matrix<T> m_, BorelMatrix<T> source)
        : iota(iota_), m(std::move(m_)), source_r(std::move(source)) {
        validate();
    }

private:
    void validate() const {
        const int n = m.dim();
        if (iota < 0 || iota >= n) throw DimensionError("idempotent index out of range");
        if (!(m.trace() == T(1))) throw InternalError("idempotent trace is not 1");
        if (!(m * m == m)) throw InternalError("idempotent is not idempotent");
        for (int g = 0; g < n; ++g) {
            for (int c = 0; c < n; ++c) {
                if ((g > iota || c < iota) && !(m(g, c) == T(0))) {
                    throw InternalError("idempotent violates its vanishing pattern");
                }
            }
        }
    }
};

/// Product of the rank-(n-1) shifts of r, normalized by its trace. The trace
/// equals the product of the diagonal differences prod_{k != iota}
/// (r_ii - r_kk), which is nonzero exactly when r is regular semisimple.
template <class T>
T idempotent_normalizer(const BorelMatrix<T>& r, int iota) {
    const int n = r.dim();
    T prod(1);
    for (int k = 0; k < n; ++k) {
        if (k == iota) continue;
        const T diff = r(iota, iota) - r(k, k);
        if (diff == T(0)) {
            throw NotRegularSemisimpleError("repeated diagonal entries at indices " +
                                            std::to_string(iota + 1) + ", " + std::to_string(k + 1));
        }
        prod *= diff;
    }
    return prod;
}

/// The iota-th orthogonal idempotent of r. The empty product at n = 1 is the
/// identity matrix.
template <class T>
Idempotent<T> idempotent(const BorelMatrix<T>& r, int iota) {
    const int n = r.dim();
    if (iota < 0 || iota >= n) throw DimensionError("idempotent index out of range");
    const T normalizer = idempotent_normalizer(r, iota);
    Matrix<T> prod = Matrix<T>::identity(n);
    for (int k = 0; k < n; ++k) {
        if (k == iota) continue;
        Matrix<T> shift = r.matrix();
        for (int d = 0; d < n; ++d) shift(d, d) -= r(k, k);
        prod = prod * shift;
    }
    if (!(prod.trace() == normalizer)) {
        throw InternalError("idempotent normalizer disagrees with the product trace");
    }
    const T inv = T(1) / normalizer;
    return Idempotent<T>(iota, prod.scaled(inv), r);
}

/// All n idempotents of r; their sum is checked to be the identity.
template <class T>
std::vector<Idempotent<T>> idempotent_family(const BorelMatrix<T>& r) {
    const int n = r.dim();
    std::vector<Idempotent<T>> fam;
    fam.reserve(static_cast<std::size_t>(n));
    Matrix<T> sum(n);
    for (int iota = 0; iota < n; ++iota) {
        fam.push_back(idempotent(r, iota));
        sum = sum + fam.back().m;
    }
    if (!(sum == Matrix<T>::identity(n))) {
        throw InternalError("idempotents do not sum to the identity");
    }
    return fam;
}

/// Row entry (iota, gamma) of the iota-th idempotent by the explicit
/// nested-sum expansion over increasing index chains iota < k_1 < ... < k_v
/// < gamma, an independent route to the same value as the matrix products:
///
///   r_ig / (r_ii - r_gg)
///   + sum_v sum_chains r_{i k_1} r_{k_v g} / ((r_ii - r_{k_1 k_1})(r_ii - r_gg))
///       * prod_u r_{k_u k_{u+1}} / (r_ii - r_{k_{u+1} k_{u+1}})
///
/// Requires gamma >= iota; the diagonal entry is 1.
template <class T>
T idempotent_row_entry_closed_form(const BorelMatrix<T>& r, int iota, int gamma) {
    if (gamma < iota) throw DimensionError("closed form covers the row right of the diagonal");
    idempotent_normalizer(r, iota); // reject non-regular-semisimple input up front
    if (gamma == iota) return T(1);
    const T rii = r(iota, iota);
    T total = r(iota, gamma) / (rii - r(gamma, gamma));
    // Chains are enumerated as subsets of the open interval (iota, gamma).
    const int width = gamma - iota - 1;
    for (unsigned mask = 1; mask < (1u << width); ++mask) {
        std::vector<int> chain;
        for (int b = 0; b < width; ++b) {
            if (mask & (1u << b)) chain.push_back(iota + 1 + b);
        }
        T term = r(iota, chain.front()) * r(chain.back(), gamma) /
                 ((rii - r(chain.front(), chain.front())) * (rii - r(gamma, gamma)));
        for (std::size_t u = 0; u + 1 < chain.size(); ++u) {
            term *= r(chain[u], chain[u + 1]) / (rii - r(chain[u + 1], chain[u + 1]));
        }
        total += term;
    }
    return total;
}

} // namespace borelred
