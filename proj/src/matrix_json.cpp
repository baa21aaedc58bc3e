#include "wrol/matrix_json.hpp"

#include <fstream>

namespace wrol {

using nlohmann::json;

json domain_to_json(const Domain& domain) {
  if (domain.is_gaussian()) return "gaussian_rational";
  return json{{"prime_field", domain.modulus()}};
}

Domain domain_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "gaussian_rational") return Domain::gaussian_rational();
  if (j.is_object() && j.size() == 1 && j.contains("prime_field") && j["prime_field"].is_number_unsigned())
    return Domain::prime_field(j["prime_field"].get<std::uint64_t>());
  throw ParseError("bad domain: " + j.dump());
}

json matrix_to_json(const Matrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return json{{"domain", domain_to_json(a.domain())}, {"rows", a.rows()}, {"cols", a.cols()}, {"entries", rows}};
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("matrix must be a JSON object");
  for (const char* key : {"domain", "rows", "cols", "entries"})
    if (!j.contains(key)) throw ParseError(std::string("matrix is missing '") + key + "'");
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
    throw ParseError("rows/cols must be non-negative integers");
  Domain domain = domain_from_json(j["domain"]);
  auto rows = j["rows"].get<std::size_t>();
  auto cols = j["cols"].get<std::size_t>();
  const json& entries = j["entries"];
  if (!entries.is_array() || entries.size() != rows) throw ParseError("entries must hold exactly 'rows' rows");
  std::vector<Scalar> flat;
  flat.reserve(rows * cols);
  for (const auto& row : entries) {
    if (!row.is_array() || row.size() != cols) throw ParseError("each entries row must hold exactly 'cols' scalars");
    for (const auto& x : row) {
      if (!x.is_string()) throw ParseError("scalar entries must be strings, got " + x.dump());
      flat.push_back(domain.parse_scalar(x.get<std::string>()));
    }
  }
  return Matrix(domain, rows, cols, std::move(flat));
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON in " + path);
  return matrix_from_json(j);
}

void write_matrix_file(const std::string& path, const Matrix& a) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << matrix_to_json(a).dump(2) << "\n";
}

}  // namespace wrol
