#include "torsionlab/manifold/pipeline.hpp"

#include <boost/math/constants/constants.hpp>
#include <map>

#include "torsionlab/sympow/sym_pow.hpp"
#include "torsionlab/util/parallel.hpp"

namespace torsionlab {

namespace {

void check_relators(const TwistedComplexSpec& spec, const GroupRepZ& rep) {
  require(rep.generators.size() == spec.generators.size(),
          "representation has " + std::to_string(rep.generators.size()) + " generators, spec \"" + spec.name + "\" has " +
              std::to_string(spec.generators.size()));
  const std::size_t m = rep.dim();
  for (std::size_t i = 0; i < rep.generators.size(); ++i)
    require(rep.generators[i].rows() == m && rep.generators[i].cols() == m,
            "generator " + spec.generators[i] + " has the wrong size");
  if (rep.unimodular)
    for (std::size_t i = 0; i < rep.generators.size(); ++i) {
      const Integer d = determinant(rep.generators[i]);
      require(d == 1 || d == -1, "generator " + spec.generators[i] + " has det " + d.get_str() + ", not ±1");
    }
  for (const auto& r : spec.relators)
    require(rep.evaluate(r) == IntMatrix::identity(m),
            "relator \"" + format_word(r, spec.generators) + "\" is not killed by the representation");
}

// Relators-carrying copy of rep, for coinvariants and validation.
GroupRepZ with_spec_relators(const TwistedComplexSpec& spec, GroupRepZ rep) {
  rep.relators = spec.relators;
  return rep;
}

}  // namespace

IntCochainComplex evaluate(const TwistedComplexSpec& spec, const GroupRepZ& rep) {
  check_relators(spec, rep);
  const std::size_t m = rep.dim();
  std::map<std::string, IntMatrix> cache;
  auto image = [&](const Word& w) -> const IntMatrix& {
    const std::string key = format_word(w, spec.generators);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, rep.evaluate(w)).first;
    return it->second;
  };

  IntCochainComplex c;
  for (auto n : spec.cells) c.ranks.push_back(n * m);
  for (const auto& b : spec.boundaries) {
    IntMatrix d(b.rows() * m, b.cols() * m);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        for (const auto& t : b(i, j)) {
          const IntMatrix& g = image(t.word);
          for (std::size_t r = 0; r < m; ++r)
            for (std::size_t s = 0; s < m; ++s) d(i * m + r, j * m + s) += t.coeff * g(r, s);
        }
    c.differentials.push_back(std::move(d));
  }
  c.validate();
  return c;
}

EulerReport euler_check(const TwistedComplexSpec& spec, const GroupRepZ& rep) {
  IntCochainComplex c = evaluate(spec, rep);
  EulerReport r;
  r.cell_sum = spec.cell_euler_characteristic();
  for (std::size_t q = 0; q < c.ranks.size(); ++q) r.rank_sum += (q % 2 == 0 ? 1 : -1) * static_cast<long>(c.ranks[q]);
  r.consistent = r.rank_sum == static_cast<long>(rep.dim()) * r.cell_sum;
  const bool must_vanish = spec.closed && spec.dimension % 2 == 1;
  r.passed = r.consistent && (!must_vanish || r.cell_sum == 0);
  return r;
}

TopDegreeReport h3_cross_check(const TwistedComplexSpec& spec, const GroupRepZ& rep) {
  require(spec.closed && spec.oriented, "top-degree check needs a closed oriented spec");
  IntCochainComplex c = evaluate(spec, rep);
  TopDegreeReport r;
  r.top = cokernel_invariants(c.differentials.back(), c.ranks.back());
  r.coinvariants = coinvariants(with_spec_relators(spec, rep));
  r.equal = r.top == r.coinvariants;
  return r;
}

GroupRepZ restrict_to_sublattice(const GroupRepZ& rep, const IntMatrix& sublattice) {
  const std::size_t m = rep.dim();
  require(sublattice.rows() == m && sublattice.cols() == m, "sublattice basis must be " + std::to_string(m) + "x" + std::to_string(m));
  require(determinant(sublattice) != 0, "sublattice basis is singular");
  RationalMatrix s = to_rational(sublattice);
  RationalMatrix sinv = inverse(s);
  GroupRepZ out = rep;
  for (std::size_t i = 0; i < rep.generators.size(); ++i) {
    RationalMatrix g = sinv * to_rational(rep.generators[i]) * s;
    for (const auto& x : g.data())
      if (x.get_den() != 1) throw ValidationError("sublattice is not stable under generator " + std::to_string(i));
    out.generators[i] = to_integer(g);
  }
  return out;
}

LatticeIndependenceReport lattice_independence_check(const TwistedComplexSpec& spec, const GroupRepZ& rep,
                                                     const IntMatrix& sublattice) {
  GroupRepZ sub = restrict_to_sublattice(rep, sublattice);
  CohomologyReport a = cohomology(evaluate(spec, rep));
  CohomologyReport b = cohomology(evaluate(spec, sub));
  LatticeIndependenceReport r;
  r.alternating_m = a.alternating_torsion();
  r.alternating_sub = b.alternating_torsion();
  r.acyclic = true;
  for (const auto& d : a.degrees) {
    r.free_ranks.push_back(d.free_rank);
    if (d.free_rank != 0) r.acyclic = false;
  }
  r.equal = r.alternating_m == r.alternating_sub;
  return r;
}

RepFamily sym_pow_family(const TwistedComplexSpec& spec) {
  require(!spec.sweep_generators.empty(), "spec \"" + spec.name + "\" has no sweep generators");
  return [gens = spec.sweep_generators](unsigned k) {
    GroupRepZ rep;
    for (const auto& g : gens) rep.generators.push_back(sym_pow_checked(g, 2 * k));
    return rep;
  };
}

QuadraticFit fit_quadratic(const std::vector<Real>& x, const std::vector<Real>& y) {
  require(x.size() == y.size() && x.size() >= 3, "quadratic fit needs at least three points");
  // Normal equations for the basis (x², x, 1), solved by Cramer's rule.
  Real s[5] = {0, 0, 0, 0, 0}, t[3] = {0, 0, 0};
  for (std::size_t i = 0; i < x.size(); ++i) {
    Real p = 1;
    for (int e = 0; e < 5; ++e) {
      s[e] += p;
      if (e < 3) t[e] += p * y[i];
      p *= x[i];
    }
  }
  // A = [[s4,s3,s2],[s3,s2,s1],[s2,s1,s0]], rhs = (t2,t1,t0).
  auto det3 = [](const Real m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  const Real a[3][3] = {{s[4], s[3], s[2]}, {s[3], s[2], s[1]}, {s[2], s[1], s[0]}};
  const Real rhs[3] = {t[2], t[1], t[0]};
  const Real d = det3(a);
  require(d != 0, "quadratic fit is degenerate (need three distinct abscissae)");
  Real coef[3];
  for (int c = 0; c < 3; ++c) {
    Real m[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = j == c ? rhs[i] : a[i][j];
    coef[c] = det3(m) / d;
  }
  QuadraticFit f;
  f.c2 = coef[0];
  f.c1 = coef[1];
  f.c0 = coef[2];
  Real sse = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Real r = y[i] - (f.c2 * x[i] * x[i] + f.c1 * x[i] + f.c0);
    sse += r * r;
  }
  const std::size_t n = x.size();
  f.rms_residual = sqrt(sse / n);
  // (AᵀA)⁻¹ entry (0,0) is the cofactor of s4 over det.
  const Real inv00 = (a[1][1] * a[2][2] - a[1][2] * a[2][1]) / d;
  f.c2_stderr = n > 3 ? Real(sqrt(sse / (n - 3) * inv00)) : Real(0);
  return f;
}

SweepReport torsion_sweep(const TwistedComplexSpec& spec, const RepFamily& family, unsigned kmin, unsigned kmax,
                          unsigned threads) {
  require(kmin <= kmax, "empty k range");
  const std::size_t levels = kmax - kmin + 1;
  std::vector<IntCochainComplex> complexes(levels);
  std::vector<std::vector<std::vector<Integer>>> invariants(levels);
  std::vector<std::string> failures(levels);
  parallel_for(levels, threads == 0 ? default_threads() : threads, [&](std::size_t i) {
    const unsigned k = kmin + static_cast<unsigned>(i);
    try {
      complexes[i] = evaluate(spec, family(k));
      invariants[i] = differential_invariants(complexes[i]);
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < levels; ++i)
    if (!failures[i].empty()) throw ComputationError("sweep failed at k = " + std::to_string(kmin + i) + ": " + failures[i]);

  SweepReport rep;
  rep.spec_name = spec.name;
  rep.euler_characteristic = spec.cell_euler_characteristic();
  std::vector<Real> xs, ys;
  for (std::size_t i = 0; i < levels; ++i) {
    CohomologyReport h = cohomology(complexes[i], invariants[i]);
    SweepEntry e;
    e.k = kmin + static_cast<unsigned>(i);
    for (const auto& d : h.degrees) {
      e.free_ranks.push_back(d.free_rank);
      e.torsion_orders.push_back(d.torsion_order);
      e.log_torsion.push_back(d.log_torsion);
    }
    e.alternating = h.alternating_log_torsion();
    e.h0_vanishes = h.degrees.front().free_rank == 0 && h.degrees.front().torsion_order == 1;
    xs.push_back(Real(e.k));
    ys.push_back(e.alternating);
    rep.entries.push_back(std::move(e));
  }
  if (levels >= 3) rep.fit = fit_quadratic(xs, ys);
  if (spec.known_volume && rep.euler_characteristic == 0)
    rep.target = 2 * to_real(*spec.known_volume) / boost::math::constants::pi<Real>();
  return rep;
}

}  // namespace torsionlab
