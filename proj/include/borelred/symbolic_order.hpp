#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "borelred/matrix.hpp"
#include "borelred/multivar.hpp"

namespace borelred {

/// Power product x_1^{a_1}...x_n^{a_n} y_1^{b_1}...y_n^{b_n} in the vector
/// and covector coordinates.
struct XYMonomial {
    std::vector<int> xe, ye;

    explicit XYMonomial(int n)
        : xe(static_cast<std::size_t>(n), 0), ye(static_cast<std::size_t>(n), 0) {}

    /// x_mu * y_gamma (0-based positions).
    static XYMonomial xy(int n, int mu, int gamma);

    int vars() const { return static_cast<int>(xe.size()); }
    int total_degree() const;
    bool is_unit() const { return total_degree() == 0; }

    XYMonomial operator*(const XYMonomial& o) const;
    bool operator==(const XYMonomial& o) const { return xe == o.xe && ye == o.ye; }

    std::string str() const; // "x1*y2", "1" for the unit
};

/// Term order: compare the concatenated exponent vectors
/// (a_1, ..., a_n, b_n, ..., b_1) lexicographically: the x block in natural
/// index order followed by the y block in reversed index order. Coefficients
/// are treated as order-constants.
std::strong_ordering xy_order(const XYMonomial& lhs, const XYMonomial& rhs);

inline bool xy_greater(const XYMonomial& lhs, const XYMonomial& rhs) {
    return xy_order(lhs, rhs) == std::strong_ordering::greater;
}

/// Comparator storing monomials largest-first.
struct XYDescending {
    bool operator()(const XYMonomial& a, const XYMonomial& b) const { return xy_greater(a, b); }
};

/// A diagonal moment function expanded over the rational-function field in
/// the r entries: sum of coefficient * x_mu * y_gamma terms with mu >= iota
/// >= gamma, the leading term first.
struct SymbolicBilinear {
    int n = 0;
    int iota = 0; // 0-based
    std::map<XYMonomial, MultiRational, XYDescending> terms;

    bool is_zero() const { return terms.empty(); }
};

inline constexpr int kDefaultSymbolicMaxDim = 5;

/// Upper-triangular matrix whose entries are the indeterminates r_ab.
Matrix<MultiRational> generic_borel(int n);

/// Expands tr(j L^iota i) symbolically over Q(r_ab).
SymbolicBilinear expand_F(int n, int iota, int max_dim = kDefaultSymbolicMaxDim);

/// Largest monomial of f under the term order; throws Error on zero input.
XYMonomial initial_term(const SymbolicBilinear& f);

struct InitialTermCheck {
    int iota = 0;             // 0-based
    XYMonomial initial;
    bool is_x_iota_y_iota = false;
    bool coefficient_is_one = false;
    int support_size = 0;
};

struct RegularSequenceReport {
    int n = 0;
    std::vector<InitialTermCheck> initial_terms;
    int coprime_pairs_checked = 0;
    bool pairwise_coprime = false;
    bool pass = false;
};

/// Certifies that the initial terms are x_iota * y_iota with coefficient
/// exactly 1 and that the n initial monomials are pairwise coprime (hence a
/// monomial regular sequence). Failed checks are reported, not thrown.
RegularSequenceReport regular_sequence_certificate(int n, int max_dim = kDefaultSymbolicMaxDim);

} // namespace borelred
