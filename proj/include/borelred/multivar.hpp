#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "borelred/rational.hpp"

namespace borelred {

/// Named indeterminates: r(a,b) for the upper-triangular matrix entries
/// (0-based, a <= b), and the vector/covector coordinates x(a), y(a).
/// The ordering (kind, a, b) coincides with lexicographic order on the
/// rendered names "r11" < "r12" < ... < "x1" < ... < "y1" and is used only
/// for canonical storage and serialization.
struct VarId {
    enum class Kind : std::uint8_t { R = 0, X = 1, Y = 2 };

    Kind kind = Kind::R;
    int a = 0;
    int b = 0;

    static VarId r(int row, int col) { return {Kind::R, row, col}; }
    static VarId x(int pos) { return {Kind::X, pos, 0}; }
    static VarId y(int pos) { return {Kind::Y, pos, 0}; }

    auto operator<=>(const VarId&) const = default;

    /// 1-based display name: "r12", "x1", "y2".
    std::string name() const;
};

/// Power product of VarIds, kept sorted with strictly positive exponents.
class Monomial {
public:
    Monomial() = default;

    static Monomial var(VarId v, int exp = 1);

    Monomial operator*(const Monomial& o) const;
    auto operator<=>(const Monomial&) const = default;

    bool is_unit() const { return f_.empty(); }
    int degree() const;
    int exponent(VarId v) const;
    const std::vector<std::pair<VarId, int>>& factors() const { return f_; }

    static Monomial gcd(const Monomial& a, const Monomial& b);
    /// Exact division; throws Error when not divisible.
    Monomial divided_by(const Monomial& d) const;

    std::string str() const;

private:
    std::vector<std::pair<VarId, int>> f_;
};

/// Sparse multivariate polynomial over Rational.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c) { if (!c.is_zero()) t_[Monomial()] = c; }
    Poly(long c) : Poly(Rational(c)) {}

    static Poly var(VarId v, int exp = 1) { return term(Rational(1), Monomial::var(v, exp)); }
    static Poly term(const Rational& c, const Monomial& m);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    bool operator==(const Poly& o) const { return t_ == o.t_; }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_unit()); }
    Rational constant_value() const;

    std::size_t term_count() const { return t_.size(); }
    const std::map<Monomial, Rational>& terms() const { return t_; }

    /// Total degree of each term when they all agree; nullopt otherwise.
    /// The zero polynomial reports degree 0.
    std::optional<int> homogeneous_degree() const;

    /// Componentwise gcd of all monomials (unit for the zero polynomial).
    Monomial monomial_content() const;
    Poly divided_by_monomial(const Monomial& m) const;

    /// Coefficient of the canonically first stored monomial; 0 for the zero
    /// polynomial. Used to pin the sign of normalized fractions.
    Rational leading_coeff() const;

    /// Exact evaluation. Throws Error when a variable is missing from the
    /// assignment.
    Rational eval(const std::map<VarId, Rational>& assignment) const;

    std::string str() const;

private:
    std::map<Monomial, Rational> t_;
};

/// Rational function num/den over Q in the VarId indeterminates.
///
/// Fractions are kept unreduced except for cancellation of common monomial
/// content and sign normalization of the denominator's leading term; equality
/// is decided by cross-multiplication, so no multivariate gcd is ever needed.
class MultiRational {
public:
    MultiRational() : n_(), d_(1) {}
    MultiRational(const Rational& c) : n_(c), d_(1) {}
    MultiRational(long c) : n_(c), d_(1) {}
    MultiRational(Poly num) : n_(std::move(num)), d_(1) { normalize(); }
    MultiRational(Poly num, Poly den);

    MultiRational operator+(const MultiRational& o) const;
    MultiRational operator-(const MultiRational& o) const;
    MultiRational operator*(const MultiRational& o) const;
    MultiRational operator/(const MultiRational& o) const;
    MultiRational operator-() const;
    MultiRational& operator+=(const MultiRational& o) { *this = *this + o; return *this; }
    MultiRational& operator-=(const MultiRational& o) { *this = *this - o; return *this; }
    MultiRational& operator*=(const MultiRational& o) { *this = *this * o; return *this; }
    MultiRational& operator/=(const MultiRational& o) { *this = *this / o; return *this; }

    /// Cross-multiplication equality: n1*d2 == n2*d1.
    bool operator==(const MultiRational& o) const;

    bool is_zero() const { return n_.is_zero(); }
    bool is_one() const { return n_ == d_; }

    const Poly& num() const { return n_; }
    const Poly& den() const { return d_; }

    Rational eval(const std::map<VarId, Rational>& assignment) const;

    /// True when num and den are homogeneous of equal total degree, i.e. the
    /// function is invariant under simultaneous scaling of all variables.
    bool is_weight_zero() const;

    std::string str() const;

private:
    void normalize();

    Poly n_, d_;
};

} // namespace borelred
