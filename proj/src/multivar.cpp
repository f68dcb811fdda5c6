#include "borelred/multivar.hpp"

#include <algorithm>
#include <sstream>

#include "borelred/errors.hpp"

namespace borelred {

std::string VarId::name() const {
    switch (kind) {
        case Kind::R: return "r" + std::to_string(a + 1) + std::to_string(b + 1);
        case Kind::X: return "x" + std::to_string(a + 1);
        case Kind::Y: return "y" + std::to_string(a + 1);
    }
    return "?";
}

Monomial Monomial::var(VarId v, int exp) {
    Monomial m;
    if (exp < 0) throw Error("negative exponent in monomial");
    if (exp > 0) m.f_.emplace_back(v, exp);
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    out.f_.reserve(f_.size() + o.f_.size());
    auto ia = f_.begin(), ib = o.f_.begin();
    while (ia != f_.end() && ib != o.f_.end()) {
        if (ia->first < ib->first) {
            out.f_.push_back(*ia++);
        } else if (ib->first < ia->first) {
            out.f_.push_back(*ib++);
        } else {
            out.f_.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    out.f_.insert(out.f_.end(), ia, f_.end());
    out.f_.insert(out.f_.end(), ib, o.f_.end());
    return out;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : f_) d += e;
    return d;
}

int Monomial::exponent(VarId v) const {
    for (const auto& [w, e] : f_) {
        if (w == v) return e;
    }
    return 0;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto ia = a.f_.begin(), ib = b.f_.begin();
    while (ia != a.f_.end() && ib != b.f_.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            out.f_.emplace_back(ia->first, std::min(ia->second, ib->second));
            ++ia;
            ++ib;
        }
    }
    return out;
}

Monomial Monomial::divided_by(const Monomial& d) const {
    Monomial out;
    auto ia = f_.begin();
    auto ib = d.f_.begin();
    while (ib != d.f_.end()) {
        if (ia == f_.end() || ib->first < ia->first) {
            throw Error("monomial division is not exact");
        }
        if (ia->first < ib->first) {
            out.f_.push_back(*ia++);
            continue;
        }
        if (ia->second < ib->second) throw Error("monomial division is not exact");
        if (ia->second > ib->second) out.f_.emplace_back(ia->first, ia->second - ib->second);
        ++ia;
        ++ib;
    }
    out.f_.insert(out.f_.end(), ia, f_.end());
    return out;
}

std::string Monomial::str() const {
    if (f_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : f_) {
        if (!first) os << "*";
        first = false;
        os << v.name();
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

Poly Poly::term(const Rational& c, const Monomial& m) {
    Poly p;
    if (!c.is_zero()) p.t_[m] = c;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out = *this;
    for (const auto& [m, c] : o.t_) {
        auto it = out.t_.find(m);
        if (it == out.t_.end()) {
            out.t_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) out.t_.erase(it);
        }
    }
    return out;
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [m, c] : t_) out.t_.emplace(m, -c);
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly out;
    for (const auto& [m1, c1] : t_) {
        for (const auto& [m2, c2] : o.t_) {
            const Monomial m = m1 * m2;
            auto it = out.t_.find(m);
            if (it == out.t_.end()) {
                out.t_.emplace(m, c1 * c2);
            } else {
                it->second += c1 * c2;
            }
        }
    }
    std::erase_if(out.t_, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

Rational Poly::constant_value() const {
    if (t_.empty()) return Rational(0);
    if (!is_constant()) throw Error("constant_value of a non-constant polynomial");
    return t_.begin()->second;
}

std::optional<int> Poly::homogeneous_degree() const {
    if (t_.empty()) return 0;
    const int d = t_.begin()->first.degree();
    for (const auto& [m, c] : t_) {
        if (m.degree() != d) return std::nullopt;
    }
    return d;
}

Monomial Poly::monomial_content() const {
    if (t_.empty()) return Monomial();
    auto it = t_.begin();
    Monomial g = it->first;
    for (++it; it != t_.end() && !g.is_unit(); ++it) {
        g = Monomial::gcd(g, it->first);
    }
    return g;
}

Poly Poly::divided_by_monomial(const Monomial& m) const {
    Poly out;
    for (const auto& [mono, c] : t_) out.t_.emplace(mono.divided_by(m), c);
    return out;
}

Rational Poly::leading_coeff() const {
    if (t_.empty()) return Rational(0);
    return t_.begin()->second;
}

Rational Poly::eval(const std::map<VarId, Rational>& assignment) const {
    Rational acc(0);
    for (const auto& [m, c] : t_) {
        Rational v = c;
        for (const auto& [var, e] : m.factors()) {
            auto it = assignment.find(var);
            if (it == assignment.end()) {
                throw Error("no value assigned to variable " + var.name());
            }
            v *= pow(it->second, e);
        }
        acc += v;
    }
    return acc;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (m.is_unit()) {
            os << mag.str();
        } else if (mag.is_one()) {
            os << m.str();
        } else {
            os << mag.str() << "*" << m.str();
        }
    }
    return os.str();
}

MultiRational::MultiRational(Poly num, Poly den) : n_(std::move(num)), d_(std::move(den)) {
    if (d_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
    normalize();
}

void MultiRational::normalize() {
    if (n_.is_zero()) {
        d_ = Poly(1);
        return;
    }
    const Monomial g = Monomial::gcd(n_.monomial_content(), d_.monomial_content());
    if (!g.is_unit()) {
        n_ = n_.divided_by_monomial(g);
        d_ = d_.divided_by_monomial(g);
    }
    if (d_.leading_coeff().sign() < 0) {
        n_ = -n_;
        d_ = -d_;
    }
}

MultiRational MultiRational::operator+(const MultiRational& o) const {
    if (d_ == o.d_) return MultiRational(n_ + o.n_, d_);
    return MultiRational(n_ * o.d_ + o.n_ * d_, d_ * o.d_);
}

MultiRational MultiRational::operator-() const {
    MultiRational out = *this;
    out.n_ = -out.n_;
    return out;
}

MultiRational MultiRational::operator-(const MultiRational& o) const { return *this + (-o); }

MultiRational MultiRational::operator*(const MultiRational& o) const {
    return MultiRational(n_ * o.n_, d_ * o.d_);
}

MultiRational MultiRational::operator/(const MultiRational& o) const {
    if (o.is_zero()) throw DivisionByZeroError("division by zero rational function");
    return MultiRational(n_ * o.d_, d_ * o.n_);
}

bool MultiRational::operator==(const MultiRational& o) const {
    if (n_ == o.n_ && d_ == o.d_) return true;
    return n_ * o.d_ == o.n_ * d_;
}

Rational MultiRational::eval(const std::map<VarId, Rational>& assignment) const {
    const Rational dv = d_.eval(assignment);
    if (dv.is_zero()) throw DivisionByZeroError("denominator vanishes at evaluation point");
    return n_.eval(assignment) / dv;
}

bool MultiRational::is_weight_zero() const {
    const auto dn = n_.homogeneous_degree();
    const auto dd = d_.homogeneous_degree();
    return dn.has_value() && dd.has_value() && (n_.is_zero() || *dn == *dd);
}

std::string MultiRational::str() const {
    if (d_ == Poly(1)) return n_.str();
    return "(" + n_.str() + ")/(" + d_.str() + ")";
}

} // namespace borelred
