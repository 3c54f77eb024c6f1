#include "torsionlab/homology/complex.hpp"

#include "torsionlab/linalg/smith.hpp"

namespace torsionlab {

void IntCochainComplex::validate() const {
  require(!ranks.empty(), "complex: no degrees");
  require(differentials.size() + 1 == ranks.size(), "complex: need one differential per consecutive pair of degrees");
  for (std::size_t q = 0; q < differentials.size(); ++q) {
    const IntMatrix& d = differentials[q];
    require(d.rows() == ranks[q + 1] && d.cols() == ranks[q],
            "complex: d_" + std::to_string(q) + " has shape " + std::to_string(d.rows()) + "x" +
                std::to_string(d.cols()) + ", expected " + std::to_string(ranks[q + 1]) + "x" +
                std::to_string(ranks[q]));
  }
  for (std::size_t q = 0; q + 1 < differentials.size(); ++q) {
    if (ranks[q] == 0 || ranks[q + 2] == 0) continue;
    require(is_zero(differentials[q + 1] * differentials[q]),
            "complex: d_" + std::to_string(q + 1) + " d_" + std::to_string(q) + " != 0");
  }
}

IntCochainComplex complex_from_json(const Json& j) {
  IntCochainComplex c;
  for (const auto& r : member(j, "ranks")) c.ranks.push_back(r.get<std::size_t>());
  for (const auto& d : member(j, "differentials")) c.differentials.push_back(int_matrix_from_json(d));
  c.validate();
  return c;
}

Json to_json(const IntCochainComplex& c) {
  Json d = Json::array();
  for (const auto& m : c.differentials) d.push_back(to_json(m));
  return Json{{"ranks", c.ranks}, {"differentials", std::move(d)}};
}

Real CohomologyReport::alternating_log_torsion() const {
  Real s = 0;
  for (std::size_t q = 0; q < degrees.size(); ++q) {
    if (q % 2 == 0)
      s += degrees[q].log_torsion;
    else
      s -= degrees[q].log_torsion;
  }
  return s;
}

Rational CohomologyReport::alternating_torsion() const {
  Rational r = 1;
  for (std::size_t q = 0; q < degrees.size(); ++q) {
    if (q % 2 == 0)
      r *= degrees[q].torsion_order;
    else
      r /= degrees[q].torsion_order;
  }
  return r;
}

std::vector<std::vector<Integer>> differential_invariants(const IntCochainComplex& c) {
  std::vector<std::vector<Integer>> factors(c.differentials.size());
  for (std::size_t q = 0; q < c.differentials.size(); ++q) factors[q] = smith_invariants(c.differentials[q]);
  return factors;
}

CohomologyReport cohomology(const IntCochainComplex& c) {
  c.validate();
  return cohomology(c, differential_invariants(c));
}

CohomologyReport cohomology(const IntCochainComplex& c, const std::vector<std::vector<Integer>>& factors) {
  require(factors.size() == c.differentials.size(), "one invariant factor list per differential expected");
  const std::size_t n = c.degrees();
  CohomologyReport rep;
  rep.degrees.resize(n);
  for (std::size_t q = 0; q < n; ++q) {
    DegreeCohomology& h = rep.degrees[q];
    std::size_t rk_out = q < factors.size() ? factors[q].size() : 0;
    std::size_t rk_in = q > 0 ? factors[q - 1].size() : 0;
    h.free_rank = c.ranks[q] - rk_out - rk_in;
    if (q > 0)
      for (const auto& f : factors[q - 1])
        if (f > 1) h.torsion_factors.push_back(f);
    for (const auto& f : h.torsion_factors) h.torsion_order *= f;
    h.log_torsion = log_integer(h.torsion_order);
  }
  return rep;
}

namespace {

RationalMatrix inner_at(const IntCochainComplex& c, const InnerProducts& inner, std::size_t q) {
  if (inner.empty()) return RationalMatrix::identity(c.ranks[q]);
  const RationalMatrix& p = inner.at(q);
  require(p.rows() == c.ranks[q] && p.cols() == c.ranks[q], "inner product on C^" + std::to_string(q) + " has wrong size");
  return p;
}

// Adjoint of d_q : C^q → C^{q+1}.
RationalMatrix adjoint(const IntCochainComplex& c, const InnerProducts& inner, std::size_t q) {
  RationalMatrix dt = transpose(to_rational(c.differentials[q]));
  if (inner.empty()) return dt;
  return inverse(inner_at(c, inner, q)) * dt * inner_at(c, inner, q + 1);
}

}  // namespace

RationalMatrix combinatorial_laplacian(const IntCochainComplex& c, std::size_t q, const InnerProducts& inner) {
  require(q < c.degrees(), "laplacian: degree " + std::to_string(q) + " out of range");
  require(inner.empty() || inner.size() == c.degrees(), "laplacian: need one inner product per degree");
  const std::size_t r = c.ranks[q];
  RationalMatrix lap(r, r);
  if (q < c.differentials.size()) lap = lap + adjoint(c, inner, q) * to_rational(c.differentials[q]);
  if (q > 0) lap = lap + to_rational(c.differentials[q - 1]) * adjoint(c, inner, q - 1);
  return lap;
}

}  // namespace torsionlab
