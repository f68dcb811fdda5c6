#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "borelred/invariants.hpp"
#include "borelred/moment_map.hpp"

namespace borelred {

/// Key order is preserved so that serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

/// Scalars travel as strings "p/q" (or "p" when the denominator is 1);
/// integral JSON numbers are accepted on input.
Json scalar_to_json(const Rational& q);
Rational scalar_from_json(const Json& j);

Json vector_to_json(const std::vector<Rational>& v);
std::vector<Rational> vector_from_json(const Json& j);

Json matrix_to_json(const Matrix<Rational>& m);
Matrix<Rational> matrix_from_json(const Json& j);

/// {"n": int, "r": [[..]], "s": [[..]], "i": [..], "j": [..]};
/// triangularity of r and s is validated on load.
Json quadruple_to_json(const Quad& q);
Quad quadruple_from_json(const Json& j);

Json target_to_json(const TargetPoint& t);
TargetPoint target_from_json(const Json& j);

Json invariant_vector_to_json(const InvariantVector& v);

/// Parses text into JSON, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);

/// Reads a whole file; throws ParseError on IO failure.
Json load_json_file(const std::string& path);

} // namespace borelred
