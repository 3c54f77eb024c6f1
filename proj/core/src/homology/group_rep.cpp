#include "torsionlab/homology/group_rep.hpp"

namespace torsionlab {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  return names;
}

IntMatrix matrix_power(const IntMatrix& g, long e, const IntMatrix* ginv) {
  const IntMatrix& base = e < 0 ? *ginv : g;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  IntMatrix r = IntMatrix::identity(g.rows());
  IntMatrix b = base;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

IntMatrix stack_minus_identity(const GroupRepZ& rep, bool horizontal) {
  const std::size_t m = rep.dim();
  IntMatrix acc = horizontal ? IntMatrix(m, 0) : IntMatrix(0, m);
  for (const auto& g : rep.generators) {
    IntMatrix d = g - IntMatrix::identity(m);
    acc = horizontal ? hconcat(acc, d) : vconcat(acc, d);
  }
  return acc;
}

}  // namespace

IntMatrix unimodular_inverse(const IntMatrix& g) {
  require(g.square(), "inverse of a non-square matrix");
  Integer d = determinant(g);
  require(d == 1 || d == -1, "matrix is not unimodular (det = " + d.get_str() + ")");
  return to_integer(inverse(to_rational(g)));
}

void GroupRepZ::validate() const {
  require(!generators.empty(), "representation has no generators");
  const std::size_t m = generators.front().rows();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    require(g.rows() == m && g.cols() == m, "generator " + std::to_string(i) + " has the wrong size");
    if (unimodular) {
      Integer d = determinant(g);
      require(d == 1 || d == -1, "generator " + std::to_string(i) + " has det " + d.get_str() + ", not ±1");
    }
  }
  for (std::size_t r = 0; r < relators.size(); ++r)
    require(evaluate(relators[r]) == IntMatrix::identity(m), "relator " + std::to_string(r) + " is not killed");
}

IntMatrix GroupRepZ::evaluate(const Word& w) const {
  const std::size_t m = dim();
  IntMatrix r = IntMatrix::identity(m);
  for (const Letter& l : w) {
    require(l.gen < generators.size(), "word uses an unknown generator");
    IntMatrix inv;
    if (l.exp < 0) inv = unimodular_inverse(generators[l.gen]);
    r = r * matrix_power(generators[l.gen], l.exp, &inv);
  }
  return r;
}

GroupRepZ group_rep_from_json(const Json& j) {
  GroupRepZ rep;
  for (const auto& g : member(j, "generators")) rep.generators.push_back(int_matrix_from_json(g));
  rep.unimodular = j.value("unimodular", true);
  std::vector<std::string> names = default_names(rep.generators.size());
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  require(names.size() == rep.generators.size(), "representation: names and generators differ in count");
  if (j.contains("relators"))
    for (const auto& w : j.at("relators")) rep.relators.push_back(parse_word(w.get<std::string>(), names));
  rep.validate();
  return rep;
}

Json to_json(const GroupRepZ& rep) {
  Json gens = Json::array();
  for (const auto& g : rep.generators) gens.push_back(to_json(g));
  Json rels = Json::array();
  auto names = default_names(rep.generators.size());
  for (const auto& w : rep.relators) rels.push_back(format_word(w, names));
  return Json{{"generators", std::move(gens)}, {"relators", std::move(rels)}, {"unimodular", rep.unimodular}};
}

CokernelStructure coinvariants(const GroupRepZ& rep) {
  require(!rep.generators.empty(), "representation has no generators");
  for (const auto& g : rep.generators)
    require(g.rows() == rep.dim() && g.cols() == rep.dim(), "coinvariants: generator size mismatch");
  return cokernel_invariants(stack_minus_identity(rep, true), rep.dim());
}

InvariantsResult invariants(const GroupRepZ& rep, std::optional<Integer> modulus) {
  require(!rep.generators.empty(), "representation has no generators");
  for (const auto& g : rep.generators)
    require(g.rows() == rep.dim() && g.cols() == rep.dim(), "invariants: generator size mismatch");
  IntMatrix stacked = stack_minus_identity(rep, false);
  auto f = smith_invariants(stacked);
  InvariantsResult r;
  if (!modulus) {
    r.free_rank = rep.dim() - f.size();
    return r;
  }
  require(*modulus >= 2, "invariants: modulus must be at least 2");
  // |ker| on (Z/N)^m is Π gcd(s_i, N) with s_i = 0 past the rank.
  for (std::size_t i = 0; i < rep.dim(); ++i) {
    Integer g;
    if (i < f.size())
      mpz_gcd(g.get_mpz_t(), f[i].get_mpz_t(), modulus->get_mpz_t());
    else
      g = *modulus;
    r.order *= g;
  }
  return r;
}

}  // namespace torsionlab
