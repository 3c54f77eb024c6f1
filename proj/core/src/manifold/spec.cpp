#include "torsionlab/manifold/spec.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "torsionlab/linalg/numeric.hpp"

namespace torsionlab {

namespace {

[[noreturn]] void fail_at(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

std::size_t count_at(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail_at(where, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

GroupRingElement element_from_json(const Json& j, const std::vector<std::string>& gens, const std::string& where) {
  if (!j.is_array()) fail_at(where, "expected an array of {coeff, word} terms");
  GroupRingElement e;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const Json& t = j[i];
    if (!t.is_object() || !t.contains("coeff") || !t.contains("word")) fail_at(at, "expected {\"coeff\", \"word\"}");
    if (!t["word"].is_string()) fail_at(at + ".word", "expected a string");
    GroupRingTerm term;
    try {
      term.coeff = integer_from_json(t["coeff"]);
      term.word = parse_word(t["word"].get<std::string>(), gens);
    } catch (const ValidationError& err) {
      fail_at(at, err.what());
    }
    e.push_back(std::move(term));
  }
  return e;
}

Json element_to_json(const GroupRingElement& e, const std::vector<std::string>& gens) {
  Json a = Json::array();
  for (const auto& t : e) a.push_back(Json{{"coeff", t.coeff.get_str()}, {"word", format_word(t.word, gens)}});
  return a;
}

int character_value(const std::vector<int>& signs, const Word& w) {
  int v = 1;
  for (const Letter& l : w)
    if (signs[l.gen] < 0 && (l.exp % 2 != 0)) v = -v;
  return v;
}

IntMatrix evaluate_at_character(const GroupRingMatrix& m, const std::vector<int>& signs) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto& t : m(i, j)) r(i, j) += t.coeff * character_value(signs, t.word);
  return r;
}

}  // namespace

long TwistedComplexSpec::cell_euler_characteristic() const {
  long s = 0;
  for (std::size_t q = 0; q < cells.size(); ++q) s += (q % 2 == 0 ? 1 : -1) * static_cast<long>(cells[q]);
  return s;
}

std::vector<std::vector<int>> probe_characters(const TwistedComplexSpec& spec) {
  const std::size_t g = spec.generators.size();
  std::vector<std::vector<int>> out{std::vector<int>(g, 1)};
  if (g == 0) return out;
  // Sign patterns in a fixed shuffled order; at most 2^16 are inspected.
  const std::size_t span = g >= 16 ? (std::size_t{1} << 16) : (std::size_t{1} << g);
  std::vector<std::size_t> masks(span - 1);
  std::iota(masks.begin(), masks.end(), 1);
  std::mt19937_64 rng(0x7463785f70726f62ULL);
  std::shuffle(masks.begin(), masks.end(), rng);
  for (std::size_t mask : masks) {
    if (out.size() == 3) break;
    std::vector<int> signs(g, 1);
    for (std::size_t i = 0; i < g && i < 64; ++i)
      if ((mask >> i) & 1U) signs[i] = -1;
    bool kills = std::all_of(spec.relators.begin(), spec.relators.end(),
                             [&](const Word& r) { return character_value(signs, r) == 1; });
    if (kills) out.push_back(std::move(signs));
  }
  return out;
}

TwistedComplexSpec spec_from_json(const Json& j) {
  if (!j.is_object()) fail_at("$", "expected a JSON object");
  if (j.contains("format") && j["format"] != kFormatTag)
    fail_at("$.format", "unsupported format tag (expected \"" + std::string(kFormatTag) + "\")");
  TwistedComplexSpec s;
  if (!j.contains("name") || !j["name"].is_string()) fail_at("$.name", "missing or not a string");
  s.name = j["name"].get<std::string>();
  if (!j.contains("dimension")) fail_at("$.dimension", "missing");
  s.dimension = count_at(j["dimension"], "$.dimension");
  if (s.dimension == 0) fail_at("$.dimension", "must be at least 1");

  if (!j.contains("generators") || !j["generators"].is_array()) fail_at("$.generators", "missing or not an array");
  for (std::size_t i = 0; i < j["generators"].size(); ++i) {
    const Json& g = j["generators"][i];
    if (!g.is_string() || g.get<std::string>().empty() || g.get<std::string>().find_first_of(" ^") != std::string::npos)
      fail_at("$.generators[" + std::to_string(i) + "]", "expected a symbol without spaces or '^'");
    if (std::find(s.generators.begin(), s.generators.end(), g.get<std::string>()) != s.generators.end())
      fail_at("$.generators[" + std::to_string(i) + "]", "duplicate generator");
    s.generators.push_back(g.get<std::string>());
  }
  if (j.contains("relators")) {
    const Json& rs = j["relators"];
    if (!rs.is_array()) fail_at("$.relators", "expected an array of words");
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const std::string at = "$.relators[" + std::to_string(i) + "]";
      if (!rs[i].is_string()) fail_at(at, "expected a word string");
      try {
        s.relators.push_back(parse_word(rs[i].get<std::string>(), s.generators));
      } catch (const ValidationError& err) {
        fail_at(at, err.what());
      }
    }
  }

  if (!j.contains("cells") || !j["cells"].is_array()) fail_at("$.cells", "missing or not an array");
  for (std::size_t i = 0; i < j["cells"].size(); ++i)
    s.cells.push_back(count_at(j["cells"][i], "$.cells[" + std::to_string(i) + "]"));
  if (s.cells.size() != s.dimension + 1)
    fail_at("$.cells", "expected " + std::to_string(s.dimension + 1) + " counts, got " + std::to_string(s.cells.size()));

  if (!j.contains("boundaries") || !j["boundaries"].is_array()) fail_at("$.boundaries", "missing or not an array");
  const Json& bs = j["boundaries"];
  if (bs.size() != s.dimension)
    fail_at("$.boundaries", "expected " + std::to_string(s.dimension) + " matrices, got " + std::to_string(bs.size()));
  for (std::size_t q = 0; q < s.dimension; ++q) {
    const std::string at = "$.boundaries[" + std::to_string(q) + "]";
    const Json& m = bs[q];
    const std::size_t rows = s.cells[q + 1], cols = s.cells[q];
    if (!m.is_array() || m.size() != rows) fail_at(at, "expected " + std::to_string(rows) + " rows (cells in degree " + std::to_string(q + 1) + ")");
    GroupRingMatrix gm(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const std::string rat = at + "[" + std::to_string(r) + "]";
      if (!m[r].is_array() || m[r].size() != cols) fail_at(rat, "expected " + std::to_string(cols) + " entries (cells in degree " + std::to_string(q) + ")");
      for (std::size_t c = 0; c < cols; ++c)
        gm(r, c) = element_from_json(m[r][c], s.generators, rat + "[" + std::to_string(c) + "]");
    }
    s.boundaries.push_back(std::move(gm));
  }

  if (j.contains("known_volume") && !j["known_volume"].is_null()) {
    const Json& v = j["known_volume"];
    try {
      s.known_volume = v.is_string() ? parse_rational(v.get<std::string>()) : rational_from_json(v);
    } catch (const ValidationError& err) {
      fail_at("$.known_volume", err.what());
    }
    if (*s.known_volume <= 0) fail_at("$.known_volume", "must be positive");
  }
  for (const char* flag : {"oriented", "closed"}) {
    if (!j.contains(flag)) continue;
    if (!j[flag].is_boolean()) fail_at(std::string("$.") + flag, "expected true or false");
    (std::string(flag) == "oriented" ? s.oriented : s.closed) = j[flag].get<bool>();
  }
  if (j.contains("sweep") && j["sweep"].contains("generators")) {
    const Json& sg = j["sweep"]["generators"];
    if (!sg.is_array() || sg.size() != s.generators.size())
      fail_at("$.sweep.generators", "expected one 2x2 matrix per generator");
    for (std::size_t i = 0; i < sg.size(); ++i) {
      IntMatrix g;
      try {
        g = int_matrix_from_json(sg[i]);
      } catch (const ValidationError& err) {
        fail_at("$.sweep.generators[" + std::to_string(i) + "]", err.what());
      }
      if (g.rows() != 2 || g.cols() != 2) fail_at("$.sweep.generators[" + std::to_string(i) + "]", "expected a 2x2 matrix");
      s.sweep_generators.push_back(std::move(g));
    }
  }

  for (const auto& signs : probe_characters(s)) {
    for (std::size_t q = 0; q + 1 < s.dimension; ++q) {
      IntMatrix dd = evaluate_at_character(s.boundaries[q + 1], signs) * evaluate_at_character(s.boundaries[q], signs);
      if (!is_zero(dd)) {
        std::string pattern;
        for (int x : signs) pattern += x > 0 ? '+' : '-';
        fail_at("$.boundaries[" + std::to_string(q + 1) + "]",
                "d_" + std::to_string(q + 1) + " d_" + std::to_string(q) + " != 0 at probe character " + pattern);
      }
    }
  }
  return s;
}

TwistedComplexSpec parse_spec(const std::filesystem::path& path) {
  return spec_from_json(read_json_file(path));
}

Json to_json(const TwistedComplexSpec& s) {
  Json j;
  j["format"] = kFormatTag;
  j["name"] = s.name;
  j["dimension"] = s.dimension;
  j["generators"] = s.generators;
  Json rels = Json::array();
  for (const auto& r : s.relators) rels.push_back(format_word(r, s.generators));
  j["relators"] = rels;
  j["cells"] = s.cells;
  Json bs = Json::array();
  for (const auto& m : s.boundaries) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(element_to_json(m(r, c), s.generators));
      rows.push_back(row);
    }
    bs.push_back(rows);
  }
  j["boundaries"] = bs;
  if (s.known_volume) j["known_volume"] = s.known_volume->get_str();
  j["oriented"] = s.oriented;
  j["closed"] = s.closed;
  if (!s.sweep_generators.empty()) {
    Json g = Json::array();
    for (const auto& m : s.sweep_generators) g.push_back(to_json(m));
    j["sweep"] = Json{{"generators", g}};
  }
  return j;
}

}  // namespace torsionlab
