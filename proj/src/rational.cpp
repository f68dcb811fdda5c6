#include "borelred/rational.hpp"

#include <cctype>
#include <ostream>

namespace borelred {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) {
        throw DivisionByZeroError("rational with zero denominator");
    }
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    // Grammar: [+-] digits [ "/" digits ].
    const auto bad = [&] {
        return ParseError("malformed rational: \"" + std::string(text) + "\"");
    };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    const std::size_t num_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == num_begin) throw bad();
    std::string num(text.substr(num_begin, pos - num_begin));
    if (negative) num.insert(num.begin(), '-');
    std::string den = "1";
    if (pos < text.size()) {
        if (text[pos] != '/') throw bad();
        ++pos;
        const std::size_t den_begin = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == den_begin || pos != text.size()) throw bad();
        den.assign(text.substr(den_begin));
    }
    mpq_class v{mpz_class{num}, mpz_class{den}};
    if (sgn(v.get_den()) == 0) {
        throw ParseError("rational with zero denominator: \"" + std::string(text) + "\"");
    }
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw DivisionByZeroError("division by zero rational");
    return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r));
}

Rational pow(const Rational& base, int exp) {
    if (exp < 0) return pow(base.inverse(), -exp);
    Rational acc(1);
    Rational b = base;
    int e = exp;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

} // namespace borelred
