#include "torsionlab/io/json_io.hpp"

#include <fstream>
#include <sstream>

#include "torsionlab/linalg/numeric.hpp"

namespace torsionlab {

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "cannot write " + path.string());
  out << text;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

const Json& member(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<long>());
  throw ValidationError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ValidationError("expected a rational, got " + j.dump());
}

namespace {

template <class T, class Parse>
Matrix<T> matrix_from_json(const Json& j, Parse parse) {
  const std::size_t rows = member(j, "rows").get<std::size_t>();
  const std::size_t cols = member(j, "cols").get<std::size_t>();
  const Json& e = member(j, "entries");
  require(e.is_array() && e.size() == rows, "matrix: entries must have `rows` rows");
  Matrix<T> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    require(e[i].is_array() && e[i].size() == cols, "matrix: row " + std::to_string(i) + " has wrong length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse(e[i][k]);
  }
  return m;
}

template <class T>
Json matrix_to_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(m(i, k).get_str());
    rows.push_back(std::move(r));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

}  // namespace

IntMatrix int_matrix_from_json(const Json& j) { return matrix_from_json<Integer>(j, integer_from_json); }
RationalMatrix rational_matrix_from_json(const Json& j) {
  return matrix_from_json<Rational>(j, rational_from_json);
}
Json to_json(const IntMatrix& m) { return matrix_to_json(m); }
Json to_json(const RationalMatrix& m) { return matrix_to_json(m); }

}  // namespace torsionlab
