#pragma once

#include <map>
#include <string>

#include "borelred/rational.hpp"

namespace borelred {

/// Laurent polynomial in one formal variable t with exact rational
/// coefficients. Exponents may be negative; zero coefficients are never
/// stored, so structural equality is semantic equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c) { if (!c.is_zero()) c_[0] = c; }
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

    /// c * t^exp
    static LaurentPoly monomial(const Rational& c, int exp);
    /// t^exp
    static LaurentPoly t(int exp) { return monomial(Rational(1), exp); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
    LaurentPoly& operator-=(const LaurentPoly& o) { *this = *this - o; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }

    /// Smallest/largest exponent with nonzero coefficient; throws on the zero
    /// polynomial.
    int min_exponent() const;
    int max_exponent() const;

    Rational coeff(int exp) const;

    /// Value of the t -> 0 limit. Throws LimitDoesNotExistError when a
    /// negative exponent carries a nonzero coefficient.
    Rational limit_at_zero() const;

    const std::map<int, Rational>& terms() const { return c_; }

    std::string str() const;

private:
    std::map<int, Rational> c_;
};

inline LaurentPoly operator*(const Rational& c, const LaurentPoly& f) {
    return LaurentPoly(c) * f;
}

/// Free-function spelling of LaurentPoly::limit_at_zero.
inline Rational laurent_limit_at_zero(const LaurentPoly& f) { return f.limit_at_zero(); }

} // namespace borelred
