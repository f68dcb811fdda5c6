#include "borelred/json_io.hpp"

#include <fstream>
#include <sstream>

namespace borelred {

Json scalar_to_json(const Rational& q) { return q.str(); }

Rational scalar_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("scalar must be a \"p/q\" string or an integer, got " + j.dump());
}

Json vector_to_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const Rational& c : v) out.push_back(scalar_to_json(c));
    return out;
}

std::vector<Rational> vector_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a JSON array of scalars");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const Json& e : j) out.push_back(scalar_from_json(e));
    return out;
}

Json matrix_to_json(const Matrix<Rational>& m) {
    Json out = Json::array();
    for (int a = 0; a < m.dim(); ++a) {
        Json row = Json::array();
        for (int b = 0; b < m.dim(); ++b) row.push_back(scalar_to_json(m(a, b)));
        out.push_back(std::move(row));
    }
    return out;
}

Matrix<Rational> matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty JSON array of rows");
    const int n = static_cast<int>(j.size());
    Matrix<Rational> m(n);
    for (int a = 0; a < n; ++a) {
        const Json& row = j.at(static_cast<std::size_t>(a));
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw ParseError("matrix rows must all have length " + std::to_string(n));
        }
        for (int b = 0; b < n; ++b) m(a, b) = scalar_from_json(row.at(static_cast<std::size_t>(b)));
    }
    return m;
}

Json quadruple_to_json(const Quad& q) {
    Json out;
    out["n"] = q.dim();
    out["r"] = matrix_to_json(q.r.matrix());
    out["s"] = matrix_to_json(q.s.matrix());
    out["i"] = vector_to_json(q.i);
    out["j"] = vector_to_json(q.j);
    return out;
}

Quad quadruple_from_json(const Json& j) {
    for (const char* key : {"n", "r", "s", "i", "j"}) {
        if (!j.contains(key)) throw ParseError(std::string("quadruple is missing key \"") + key + "\"");
    }
    const int n = j.at("n").get<int>();
    const Matrix<Rational> r = matrix_from_json(j.at("r"));
    const Matrix<Rational> s = matrix_from_json(j.at("s"));
    if (r.dim() != n || s.dim() != n) throw ParseError("matrix dimensions disagree with \"n\"");
    try {
        return Quad(BorelMatrix<Rational>(r), DualBorelMatrix<Rational>(s),
                    vector_from_json(j.at("i")), vector_from_json(j.at("j")));
    } catch (const ShapeError& e) {
        throw ParseError(std::string("quadruple violates triangularity: ") + e.what());
    } catch (const DimensionError& e) {
        throw ParseError(std::string("quadruple dimensions mismatch: ") + e.what());
    }
}

Json target_to_json(const TargetPoint& t) {
    Json out;
    out["x"] = vector_to_json(t.x);
    out["y"] = vector_to_json(t.y);
    return out;
}

TargetPoint target_from_json(const Json& j) {
    if (!j.contains("x") || !j.contains("y")) throw ParseError("target needs \"x\" and \"y\"");
    return TargetPoint(vector_from_json(j.at("x")), vector_from_json(j.at("y")));
}

Json invariant_vector_to_json(const InvariantVector& v) {
    Json out;
    out["F"] = vector_to_json(v.F);
    out["G"] = vector_to_json(v.G);
    out["H"] = vector_to_json(v.H);
    Json k = Json::array();
    const int n = v.dim();
    for (int gamma = 0; gamma < n; ++gamma) {
        for (int nu = gamma + 1; nu < n; ++nu) {
            Json e;
            e["gamma"] = gamma + 1;
            e["nu"] = nu + 1;
            e["value"] = scalar_to_json(v.K[static_cast<std::size_t>(
                InvariantVector::pair_index(n, gamma, nu))]);
            k.push_back(std::move(e));
        }
    }
    out["K"] = std::move(k);
    return out;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

} // namespace borelred
