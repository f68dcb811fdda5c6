#include "borelred/laurent.hpp"

#include <sstream>

namespace borelred {

LaurentPoly LaurentPoly::monomial(const Rational& c, int exp) {
    LaurentPoly f;
    if (!c.is_zero()) f.c_[exp] = c;
    return f;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.c_) {
        auto it = out.c_.find(e);
        if (it == out.c_.end()) {
            out.c_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) out.c_.erase(it);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : c_) out.c_.emplace(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : c_) {
        for (const auto& [e2, c2] : o.c_) {
            const int e = e1 + e2;
            auto it = out.c_.find(e);
            if (it == out.c_.end()) {
                out.c_.emplace(e, c1 * c2);
            } else {
                it->second += c1 * c2;
            }
        }
    }
    std::erase_if(out.c_, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

int LaurentPoly::min_exponent() const {
    if (c_.empty()) throw Error("min_exponent of the zero Laurent polynomial");
    return c_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (c_.empty()) throw Error("max_exponent of the zero Laurent polynomial");
    return c_.rbegin()->first;
}

Rational LaurentPoly::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::limit_at_zero() const {
    if (c_.empty()) return Rational(0);
    if (c_.begin()->first < 0) {
        throw LimitDoesNotExistError("pole at t = 0: " + str());
    }
    return coeff(0);
}

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
        if (!first) os << " + ";
        first = false;
        if (e == 0) {
            os << c.str();
        } else {
            if (!c.is_one()) os << c.str() << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

} // namespace borelred
