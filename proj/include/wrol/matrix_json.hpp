#pragma once

// JSON encoding of matrices:
//   {"domain": "gaussian_rational" | {"prime_field": p},
//    "rows": n, "cols": m, "entries": [["1/2+3/4i", ...], ...]}
// Scalars are written in canonical form, so decode(encode(A)) == A and
// encode(decode(text)) is a fixed point.

#include <string>

#include <json.hpp>

#include "wrol/matrix.hpp"

namespace wrol {

nlohmann::json domain_to_json(const Domain& domain);
Domain domain_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& a);
/// Throws ParseError on any schema violation.
Matrix matrix_from_json(const nlohmann::json& j);

Matrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const Matrix& a);

}  // namespace wrol
