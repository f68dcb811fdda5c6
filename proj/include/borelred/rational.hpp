#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "borelred/errors.hpp"

namespace borelred {

/// Exact arbitrary-precision rational number, always kept in canonical form:
/// positive denominator, gcd(|numerator|, denominator) = 1.
///
/// All arithmetic is exact; there is no rounding anywhere in this library.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(int n) : v_(n) {}

    /// num/den, canonicalized. Throws DivisionByZeroError when den == 0.
    Rational(long num, long den);

    /// Parses "p", "+p", "-p" or "p/q" with q > 0 digits only.
    static Rational parse(std::string_view text);

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        const int c = cmp(v_, o.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    /// Multiplicative inverse; throws DivisionByZeroError on zero.
    Rational inverse() const;

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    /// "p/q", or just "p" when q = 1.
    std::string str() const { return v_.get_str(); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

/// Free-function spelling of Rational::parse.
inline Rational parse_rational(std::string_view text) { return Rational::parse(text); }

Rational pow(const Rational& base, int exp);

std::ostream& operator<<(std::ostream& os, const Rational& q);

} // namespace borelred
