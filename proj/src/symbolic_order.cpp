#include "borelred/symbolic_order.hpp"

#include <sstream>

#include "borelred/idempotents.hpp"

namespace borelred {

XYMonomial XYMonomial::xy(int n, int mu, int gamma) {
    XYMonomial m(n);
    m.xe.at(static_cast<std::size_t>(mu)) += 1;
    m.ye.at(static_cast<std::size_t>(gamma)) += 1;
    return m;
}

int XYMonomial::total_degree() const {
    int d = 0;
    for (int e : xe) d += e;
    for (int e : ye) d += e;
    return d;
}

XYMonomial XYMonomial::operator*(const XYMonomial& o) const {
    if (vars() != o.vars()) throw DimensionError("monomial variable count mismatch");
    XYMonomial out = *this;
    for (std::size_t k = 0; k < xe.size(); ++k) {
        out.xe[k] += o.xe[k];
        out.ye[k] += o.ye[k];
    }
    return out;
}

std::string XYMonomial::str() const {
    std::ostringstream os;
    bool first = true;
    const auto emit = [&](const char* base, std::size_t pos, int e) {
        if (e == 0) return;
        if (!first) os << "*";
        first = false;
        os << base << pos + 1;
        if (e != 1) os << "^" << e;
    };
    for (std::size_t k = 0; k < xe.size(); ++k) emit("x", k, xe[k]);
    for (std::size_t k = 0; k < ye.size(); ++k) emit("y", k, ye[k]);
    return first ? "1" : os.str();
}

std::strong_ordering xy_order(const XYMonomial& lhs, const XYMonomial& rhs) {
    if (lhs.vars() != rhs.vars()) throw DimensionError("monomial variable count mismatch");
    for (std::size_t k = 0; k < lhs.xe.size(); ++k) {
        if (lhs.xe[k] != rhs.xe[k]) return lhs.xe[k] <=> rhs.xe[k];
    }
    for (std::size_t k = lhs.ye.size(); k-- > 0;) {
        if (lhs.ye[k] != rhs.ye[k]) return lhs.ye[k] <=> rhs.ye[k];
    }
    return std::strong_ordering::equal;
}

Matrix<MultiRational> generic_borel(int n) {
    Matrix<MultiRational> m(n);
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) m(a, b) = MultiRational(Poly::var(VarId::r(a, b)));
    }
    return m;
}

SymbolicBilinear expand_F(int n, int iota, int max_dim) {
    if (n < 1 || n > max_dim) {
        throw SizeError("symbolic expansion limited to dimensions 1.." + std::to_string(max_dim));
    }
    if (iota < 0 || iota >= n) throw DimensionError("index out of range");
    const BorelMatrix<MultiRational> r(generic_borel(n));
    const Idempotent<MultiRational> L = idempotent(r, iota);
    SymbolicBilinear f;
    f.n = n;
    f.iota = iota;
    for (int gamma = 0; gamma <= iota; ++gamma) {
        for (int mu = iota; mu < n; ++mu) {
            const MultiRational& c = L.m(gamma, mu);
            if (c.is_zero()) continue;
            f.terms.emplace(XYMonomial::xy(n, mu, gamma), c);
        }
    }
    return f;
}

XYMonomial initial_term(const SymbolicBilinear& f) {
    if (f.is_zero()) throw Error("initial term of the zero function");
    return f.terms.begin()->first; // terms are stored largest-first
}

RegularSequenceReport regular_sequence_certificate(int n, int max_dim) {
    RegularSequenceReport rep;
    rep.n = n;
    std::vector<XYMonomial> initials;
    for (int iota = 0; iota < n; ++iota) {
        const SymbolicBilinear f = expand_F(n, iota, max_dim);
        InitialTermCheck chk{iota, initial_term(f), false, false,
                             static_cast<int>(f.terms.size())};
        const XYMonomial expected = XYMonomial::xy(n, iota, iota);
        chk.is_x_iota_y_iota = chk.initial == expected;
        const auto it = f.terms.find(expected);
        chk.coefficient_is_one = it != f.terms.end() && it->second.is_one();
        initials.push_back(chk.initial);
        rep.initial_terms.push_back(std::move(chk));
    }
    rep.pairwise_coprime = true;
    for (std::size_t a = 0; a < initials.size(); ++a) {
        for (std::size_t b = a + 1; b < initials.size(); ++b) {
            ++rep.coprime_pairs_checked;
            for (std::size_t k = 0; k < initials[a].xe.size(); ++k) {
                if ((initials[a].xe[k] > 0 && initials[b].xe[k] > 0) ||
                    (initials[a].ye[k] > 0 && initials[b].ye[k] > 0)) {
                    rep.pairwise_coprime = false;
                }
            }
        }
    }
    rep.pass = rep.pairwise_coprime;
    for (const auto& chk : rep.initial_terms) {
        rep.pass = rep.pass && chk.is_x_iota_y_iota && chk.coefficient_is_one;
    }
    return rep;
}

} // namespace borelred
