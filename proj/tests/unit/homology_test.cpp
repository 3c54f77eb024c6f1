#include <gtest/gtest.h>

#include "support.hpp"
#include "torsionlab/homology/complex.hpp"
#include "torsionlab/homology/group_rep.hpp"
#include "torsionlab/homology/torsion.hpp"

using namespace torsionlab;
using testing_support::Rng;

namespace {

IntMatrix im(std::size_t r, std::size_t c, std::vector<long> v) {
  std::vector<Integer> e(v.begin(), v.end());
  return IntMatrix(r, c, std::move(e));
}

RationalMatrix rm(std::size_t r, std::size_t c, std::vector<long> v) { return to_rational(im(r, c, v)); }

std::vector<Integer> ints(std::vector<long> v) { return {v.begin(), v.end()}; }

IntCochainComplex times(long n) { return {{1, 1}, {im(1, 1, {n})}}; }

IntCochainComplex mapping_torus(const IntMatrix& a) {
  return {{a.rows(), a.rows()}, {a - IntMatrix::identity(a.rows())}};
}

VolumeData empty_volumes(std::size_t degrees) {
  return {std::vector<RationalMatrix>(degrees, RationalMatrix(0, 0)), true};
}

class Homology : public ::testing::Test {
 protected:
  void SetUp() override { set_working_digits(64); }
};

}  // namespace

TEST_F(Homology, CohomologyExamples) {
  auto h = cohomology(times(5));
  EXPECT_EQ(h.degrees[0].free_rank, 0u);
  EXPECT_EQ(h.degrees[0].torsion_order, 1);
  EXPECT_EQ(h.degrees[1].torsion_factors, ints({5}));

  h = cohomology({{2, 3}, {IntMatrix(3, 2)}});
  EXPECT_EQ(h.degrees[0].free_rank, 2u);
  EXPECT_EQ(h.degrees[1].free_rank, 3u);
  EXPECT_TRUE(h.degrees[1].torsion_factors.empty());

  h = cohomology(mapping_torus(im(2, 2, {2, 1, 1, 1})));
  EXPECT_EQ(h.degrees[0].free_rank, 0u);
  EXPECT_EQ(h.degrees[1].free_rank, 0u);
  EXPECT_EQ(h.degrees[1].torsion_order, 1);
}

TEST_F(Homology, LogTorsionMatchesOrder) {
  const auto h = cohomology({{2, 3, 1}, {im(3, 2, {2, 0, 0, 4, 0, 0}), im(1, 3, {0, 0, 3})}});
  EXPECT_EQ(h.degrees[1].torsion_order, 8);
  EXPECT_LT(abs(h.degrees[1].log_torsion - log(Real(8))), Real("1e-60"));
  EXPECT_EQ(h.alternating_torsion(), Rational(3, 8));
  EXPECT_LT(abs(h.alternating_log_torsion() + log(Real(8)) - log(Real(3))), Real("1e-60"));
}

TEST_F(Homology, RejectsNonComplex) {
  IntCochainComplex bad{{1, 1, 1}, {im(1, 1, {1}), im(1, 1, {1})}};
  EXPECT_THROW(cohomology(bad), ValidationError);
  IntCochainComplex shape{{1, 2}, {im(1, 1, {1})}};
  EXPECT_THROW(cohomology(shape), ValidationError);
}

TEST_F(Homology, DegenerateRanksAreLegal) {
  const auto h = cohomology({{0, 2, 0}, {IntMatrix(2, 0), IntMatrix(0, 2)}});
  EXPECT_EQ(h.degrees[1].free_rank, 2u);
  EXPECT_EQ(h.alternating_torsion(), 1);
}

TEST_F(Homology, JsonRoundTrip) {
  const IntCochainComplex c{{2, 3, 1}, {im(3, 2, {2, 0, 0, 4, 0, 0}), im(1, 3, {0, 0, 3})}};
  const auto back = complex_from_json(to_json(c));
  EXPECT_EQ(back.ranks, c.ranks);
  EXPECT_EQ(back.differentials, c.differentials);
}

TEST_F(Homology, LaplacianExamples) {
  EXPECT_TRUE(is_zero(combinatorial_laplacian({{1, 1}, {IntMatrix(1, 1)}}, 0)));
  EXPECT_EQ(combinatorial_laplacian(times(5), 0), rm(1, 1, {25}));
  EXPECT_EQ(combinatorial_laplacian(times(5), 1), rm(1, 1, {25}));
  const IntCochainComplex two{{1, 2}, {im(2, 1, {1, 0})}};
  EXPECT_EQ(combinatorial_laplacian(two, 0), rm(1, 1, {1}));
  EXPECT_EQ(combinatorial_laplacian(two, 1), rm(2, 2, {1, 0, 0, 0}));
  EXPECT_THROW(combinatorial_laplacian(two, 2), ValidationError);
}

TEST_F(Homology, LaplacianIsSymmetricPsd) {
  Rng rng(21);
  for (int rep = 0; rep < 20; ++rep) {
    const auto c = testing_support::random_three_term(rng, 5, 4);
    for (std::size_t q = 0; q < 3; ++q) {
      const auto d = combinatorial_laplacian(c, q);
      EXPECT_TRUE(is_symmetric(d));
      for (std::size_t i = 0; i < d.rows(); ++i) EXPECT_GE(d(i, i), 0);
    }
  }
}

TEST_F(Homology, TorsionExamples) {
  EXPECT_EQ(rt_laplacian(times(5), empty_volumes(2)).value(), 5);
  EXPECT_EQ(rt_arithmetic(times(5), empty_volumes(2)).value(), 5);

  const IntCochainComplex zero{{2, 3}, {IntMatrix(3, 2)}};
  const VolumeData ortho{{RationalMatrix::identity(2), RationalMatrix::identity(3)}, true};
  EXPECT_EQ(rt_laplacian(zero, ortho).value(), 1);
  EXPECT_EQ(rt_arithmetic(zero, ortho).value(), 1);

  EXPECT_EQ(rt_laplacian(mapping_torus(im(2, 2, {3, 1, 1, 1})), empty_volumes(2)).value(), 1);
  EXPECT_EQ(rt_arithmetic(mapping_torus(im(2, 2, {1, 1, 1, 2})), empty_volumes(2)).value(), 1);

  const IntCochainComplex mixed{{2, 3, 1}, {im(3, 2, {2, 0, 0, 4, 0, 0}), im(1, 3, {0, 0, 3})}};
  EXPECT_EQ(rt_arithmetic(mixed, empty_volumes(3)).value(), Rational(8, 3));
  EXPECT_EQ(rt_laplacian(mixed, empty_volumes(3)).value(), Rational(8, 3));
}

TEST_F(Homology, IdentityOnMultiplicationComplexes) {
  for (long n = 1; n <= 20; ++n) {
    const auto r = check_torsion_identity(times(n), empty_volumes(2));
    EXPECT_TRUE(r.equal);
    EXPECT_EQ(r.lhs.value(), n);
    EXPECT_EQ(r.rhs.value(), n);
  }
}

TEST_F(Homology, IdentityOnRandomComplexes) {
  Rng rng(22);
  for (int rep = 0; rep < 60; ++rep) {
    const auto c = testing_support::random_three_term(rng, 6, 5);
    const auto r = check_torsion_identity(c, lattice_volume_data(c));
    EXPECT_TRUE(r.equal) << "sample " << rep;
    EXPECT_EQ(r.lhs, r.rhs);
  }
}

TEST_F(Homology, NonLatticeVolumesScaleByRegulator) {
  // H^0 = Z spanned by (1,1), H^1 = Z. Doubling the degree-0 basis makes
  // R(μ_0) = 1/2, which enters τ with exponent +1.
  const IntCochainComplex c{{2, 1}, {im(1, 2, {1, -1})}};
  const auto lattice = lattice_volume_data(c);
  VolumeData scaled = lattice;
  scaled.lattice_basis = false;
  scaled.gram[0] = scale(lattice.gram[0], Rational(4));
  const auto a = check_torsion_identity(c, lattice);
  const auto b = check_torsion_identity(c, scaled);
  EXPECT_TRUE(a.equal);
  EXPECT_TRUE(b.equal);
  EXPECT_EQ(b.rhs.square() * 4, a.rhs.square());
}

TEST_F(Homology, InvariantUnderUnimodularInnerProducts) {
  Rng rng(23);
  for (int rep = 0; rep < 25; ++rep) {
    const auto c = testing_support::random_three_term(rng, 4, 4);
    InnerProducts inner;
    for (std::size_t q = 0; q < 3; ++q) {
      const RationalMatrix w = to_rational(testing_support::random_unimodular(rng, c.ranks[q], 6));
      inner.push_back(transpose(w) * w);
    }
    const auto base = rt_laplacian(c, lattice_volume_data(c));
    const auto moved = rt_laplacian(c, lattice_volume_data(c, inner), inner);
    EXPECT_EQ(base, moved) << "sample " << rep;
  }
}

TEST_F(Homology, MappingTorusLaw) {
  Rng rng(24);
  int done = 0;
  while (done < 20) {
    const auto m = static_cast<std::size_t>(rng.uniform(1, 4));
    const IntMatrix a = testing_support::random_unimodular(rng, m, 8);
    const Integer det = determinant(a - IntMatrix::identity(m));
    if (det == 0) continue;
    ++done;
    const auto c = mapping_torus(a);
    EXPECT_EQ(cohomology(c).degrees[1].torsion_order, Integer(abs(det)));
    EXPECT_EQ(rt_arithmetic(c, empty_volumes(2)).value(), Rational(abs(det)));
    EXPECT_EQ(rt_laplacian(c, empty_volumes(2)).value(), Rational(abs(det)));
  }
}

TEST_F(Homology, VolumeValidation) {
  const IntCochainComplex zero{{1, 1}, {IntMatrix(1, 1)}};
  EXPECT_THROW(rt_laplacian(zero, VolumeData{{rm(1, 1, {0}), rm(1, 1, {1})}, false}), ValidationError);
  EXPECT_THROW(rt_arithmetic(zero, VolumeData{{rm(1, 1, {1})}, false}), ValidationError);
}

TEST_F(Homology, Regulator) {
  EXPECT_EQ(regulator({{RationalMatrix::identity(2), RationalMatrix::identity(1)}, false}).value(), 1);
  EXPECT_EQ(regulator({{RationalMatrix(0, 0), rm(1, 1, {4})}, false}).value(), Rational(1, 2));
  const auto r = regulator({{RationalMatrix(0, 0), rm(2, 2, {2, 1, 1, 2})}, false});
  EXPECT_EQ(r.square(), Rational(1, 3));
  EXPECT_FALSE(r.is_rational());
  EXPECT_THROW(regulator({{rm(2, 2, {1, 1, 1, 1})}, false}), ValidationError);
}

TEST_F(Homology, Coinvariants) {
  auto c = coinvariants({{IntMatrix::identity(3)}, {}, true});
  EXPECT_EQ(c.free_rank, 3u);
  EXPECT_TRUE(c.torsion_factors.empty());
  c = coinvariants({{im(1, 1, {-1})}, {}, true});
  EXPECT_EQ(c.torsion_factors, ints({2}));
  c = coinvariants({{im(2, 2, {2, 1, 1, 1})}, {}, true});
  EXPECT_EQ(c.free_rank, 0u);
  EXPECT_TRUE(c.torsion_factors.empty());
  EXPECT_THROW(coinvariants({{IntMatrix::identity(2), IntMatrix::identity(3)}, {}, true}), ValidationError);
}

TEST_F(Homology, SingleGeneratorCoinvariantsAreCokernel) {
  Rng rng(25);
  for (int rep = 0; rep < 40; ++rep) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const IntMatrix g = testing_support::random_unimodular(rng, n, 8);
    EXPECT_EQ(coinvariants({{g}, {}, true}), cokernel_invariants(g - IntMatrix::identity(n), n));
  }
}

TEST_F(Homology, Invariants) {
  const GroupRepZ trivial{{IntMatrix::identity(3)}, {}, true};
  EXPECT_EQ(invariants(trivial, Integer(9)).order, Integer(729));
  EXPECT_EQ(invariants(trivial).free_rank, 3u);
  EXPECT_EQ(invariants({{im(1, 1, {-1})}, {}, true}, Integer(4)).order, 2);
  EXPECT_EQ(invariants({{im(2, 2, {1, 1, 0, 1})}, {}, true}).free_rank, 1u);
  EXPECT_THROW(invariants(trivial, Integer(1)), ValidationError);
}

TEST_F(Homology, InvariantsByEnumeration) {
  // (Z/6)^2 under [[1,2],[3,1]]: count fixed vectors directly.
  const IntMatrix g = im(2, 2, {1, 2, 3, 1});
  long fixed = 0;
  for (long x = 0; x < 6; ++x)
    for (long y = 0; y < 6; ++y)
      if ((2 * y) % 6 == 0 && (3 * x) % 6 == 0) ++fixed;
  EXPECT_EQ(invariants({{g}, {}, false}, Integer(6)).order, fixed);
}

TEST_F(Homology, GroupRepValidation) {
  Word r{{0, 2}};
  EXPECT_NO_THROW((GroupRepZ{{im(1, 1, {-1})}, {r}, true}.validate()));
  EXPECT_THROW((GroupRepZ{{im(1, 1, {2})}, {}, true}.validate()), ValidationError);
  EXPECT_THROW((GroupRepZ{{im(2, 2, {2, 1, 1, 1})}, {r}, true}.validate()), ValidationError);
  const auto rep = group_rep_from_json(Json::parse(
      R"({"generators":[{"rows":1,"cols":1,"entries":[["-1"]]}],"relators":["g0^2"],"unimodular":true})"));
  EXPECT_EQ(rep.evaluate(rep.relators[0]), IntMatrix::identity(1));
}
