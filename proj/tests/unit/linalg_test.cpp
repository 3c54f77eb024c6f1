#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "torsionlab/linalg/charpoly.hpp"
#include "torsionlab/linalg/local_snf.hpp"
#include "torsionlab/linalg/smith.hpp"
#include "torsionlab/linalg/sqrt_rational.hpp"

using namespace torsionlab;
using testing_support::Rng;

namespace {

IntMatrix im(std::size_t r, std::size_t c, std::vector<long> v) {
  std::vector<Integer> e(v.begin(), v.end());
  return IntMatrix(r, c, std::move(e));
}

RationalMatrix rm(std::size_t r, std::size_t c, std::vector<long> v) { return to_rational(im(r, c, v)); }

std::vector<Integer> ints(std::vector<long> v) { return {v.begin(), v.end()}; }

void expect_valid_smith(const IntMatrix& a, const SmithForm& s) {
  EXPECT_EQ(s.U * a * s.V, s.S);
  EXPECT_EQ(abs(determinant(s.U)), 1);
  EXPECT_EQ(abs(determinant(s.V)), 1);
  for (std::size_t i = 0; i < s.S.rows(); ++i)
    for (std::size_t j = 0; j < s.S.cols(); ++j)
      if (i != j) EXPECT_EQ(s.S(i, j), 0);
  for (std::size_t i = 0; i < s.rank(); ++i) {
    EXPECT_EQ(s.S(i, i), s.invariant_factors[i]);
    EXPECT_GT(s.invariant_factors[i], 0);
    if (i + 1 < s.rank()) EXPECT_TRUE(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
  }
}

}  // namespace

TEST(Smith, SpecExamples) {
  EXPECT_EQ(smith_invariants(im(2, 2, {2, 4, 6, 8})), ints({2, 4}));
  const auto id = smith_normal_form(IntMatrix::identity(3));
  EXPECT_EQ(id.invariant_factors, ints({1, 1, 1}));
  EXPECT_EQ(id.U, IntMatrix::identity(3));
  EXPECT_EQ(id.V, IntMatrix::identity(3));
  const auto z = smith_normal_form(IntMatrix(2, 3));
  EXPECT_EQ(z.rank(), 0u);
  expect_valid_smith(IntMatrix(2, 3), z);
}

TEST(Smith, TransformsAndChainOnRandomShapes) {
  Rng rng(11);
  for (int n = 0; n < 200; ++n) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 6));
    const IntMatrix a = testing_support::random_int(rng, rows, cols, 12);
    expect_valid_smith(a, smith_normal_form(a));
  }
}

TEST(Smith, MatchesMinorsOracle) {
  Rng rng(12);
  for (int n = 0; n < 300; ++n) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 5));
    const IntMatrix a = testing_support::random_int(rng, rows, cols, 10);
    EXPECT_EQ(smith_invariants(a), oracle::invariant_factors(testing_support::to_grid(a)));
  }
}

TEST(Smith, DeterministicOutput) {
  Rng rng(13);
  const IntMatrix a = testing_support::random_int(rng, 5, 4, 30);
  const auto s1 = smith_normal_form(a);
  const auto s2 = smith_normal_form(a);
  EXPECT_EQ(s1.U, s2.U);
  EXPECT_EQ(s1.V, s2.V);
}

TEST(Smith, LargeEntriesStayExact) {
  IntMatrix a = im(2, 2, {1, 0, 0, 1});
  a(0, 0) = Integer("123456789012345678901234567890");
  a(1, 1) = Integer("987654321098765432109876543210");
  a(0, 1) = 1;
  expect_valid_smith(a, smith_normal_form(a));
  EXPECT_EQ(smith_invariants(a).back(), abs(determinant(a)));
}

TEST(Cokernel, SpecExamples) {
  auto c = cokernel_invariants(im(3, 3, {1, 0, 0, 0, 2, 0, 0, 0, 0}), 3);
  EXPECT_EQ(c.free_rank, 1u);
  EXPECT_EQ(c.torsion_factors, ints({2}));
  c = cokernel_invariants(IntMatrix(2, 2), 2);
  EXPECT_EQ(c.free_rank, 2u);
  EXPECT_TRUE(c.torsion_factors.empty());
  c = cokernel_invariants(im(2, 2, {1, 1, 1, 0}), 2);
  EXPECT_EQ(c.free_rank, 0u);
  EXPECT_TRUE(c.torsion_factors.empty());
  EXPECT_THROW(cokernel_invariants(IntMatrix(2, 2), 3), ValidationError);
}

TEST(Hermite, EchelonAndMembership) {
  const IntMatrix h = hermite_normal_form(im(3, 3, {2, 4, 6, 0, 3, 9, 4, 8, 12}));
  ASSERT_EQ(h.rows(), 2u);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t lead = 0;
    while (h(i, lead) == 0) ++lead;
    EXPECT_GT(h(i, lead), 0);
    for (std::size_t k = 0; k < i; ++k) {
      EXPECT_GE(h(k, lead), 0);
      EXPECT_LT(h(k, lead), h(i, lead));
    }
  }
  EXPECT_TRUE(hnf_contains(h, ints({2, 7, 15})));
  EXPECT_FALSE(hnf_contains(h, ints({1, 0, 0})));
  bool ok = false;
  const auto c = hnf_coordinates(h, ints({2, 7, 15}), &ok);
  ASSERT_TRUE(ok);
  for (std::size_t j = 0; j < 3; ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) s += c[i] * h(i, j);
    EXPECT_EQ(s, ints({2, 7, 15})[j]);
  }
}

TEST(Hermite, KernelBasisIsSaturated) {
  const IntMatrix a = im(1, 3, {2, 4, 6});
  const IntMatrix k = integer_kernel_basis(a);
  ASSERT_EQ(k.cols(), 2u);
  EXPECT_TRUE(is_zero(a * k));
  EXPECT_EQ(smith_invariants(k), ints({1, 1}));
}

TEST(CharPoly, SpecExamples) {
  EXPECT_EQ(char_poly(rm(2, 2, {0, 1, 1, 0})), (std::vector<Rational>{-1, 0, 1}));
  EXPECT_EQ(char_poly(rm(2, 2, {2, 0, 0, 3})), (std::vector<Rational>{6, -5, 1}));
  EXPECT_EQ(char_poly(rm(2, 2, {2, 1, 1, 1})), (std::vector<Rational>{1, -3, 1}));
  EXPECT_THROW(char_poly(RationalMatrix(2, 3)), ValidationError);
}

TEST(CharPoly, CayleyHamilton) {
  Rng rng(14);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      const RationalMatrix a = testing_support::random_rational(rng, n, n, 6);
      EXPECT_TRUE(is_zero(poly_eval(char_poly(a), a)));
      EXPECT_EQ(char_poly(a).front() * ((n % 2 == 0) ? 1 : -1), determinant(a));
    }
  }
}

TEST(DetPrime, SpecExamples) {
  EXPECT_EQ(det_prime(rm(3, 3, {0, 0, 0, 0, 2, 0, 0, 0, 3})), 6);
  EXPECT_EQ(det_prime(RationalMatrix::identity(4)), 1);
  EXPECT_EQ(det_prime(rm(2, 2, {1, -1, -1, 1})), 2);
  EXPECT_EQ(det_prime(RationalMatrix(3, 3)), 1);
  EXPECT_THROW(det_prime(rm(2, 2, {1, 2, 3, 4})), ValidationError);
}

TEST(DetPrime, InvariantUnderSimultaneousPermutation) {
  Rng rng(15);
  for (int rep = 0; rep < 30; ++rep) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 5));
    const RationalMatrix x = testing_support::random_rational(rng, n, n - 1, 4);
    const RationalMatrix s = x * transpose(x);  // singular, symmetric
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    RationalMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = s(perm[i], perm[j]);
    EXPECT_EQ(det_prime(s), det_prime(p));
  }
}

TEST(LocalSmith, ValuationsAndKernel) {
  EXPECT_EQ(valuation(48, 2, 10), 4u);
  EXPECT_EQ(valuation(0, 3, 7), 7u);
  EXPECT_EQ(local_smith_valuations(im(2, 2, {9, 0, 0, 6}), 3, 4), (std::vector<unsigned>{1, 2}));
  EXPECT_EQ(local_smith_valuations(IntMatrix(2, 2), 3, 4), (std::vector<unsigned>{4, 4}));
  EXPECT_EQ(local_cokernel_valuations(im(3, 1, {4, 0, 0}), 2, 5), (std::vector<unsigned>{2, 5, 5}));
  // x ↦ 2x on (Z/8)²: kernel {0,4}², order 4.
  EXPECT_EQ(local_kernel_exponent(im(2, 2, {2, 0, 0, 2}), 2, 3), 2u);
  EXPECT_EQ(inverse_mod(3, 8), 3);
  EXPECT_THROW(inverse_mod(2, 8), ValidationError);
}

TEST(LocalSmith, AgreesWithGlobalSmithAwayFromPrecision) {
  Rng rng(16);
  for (int rep = 0; rep < 50; ++rep) {
    const IntMatrix a = testing_support::random_int(rng, 4, 4, 9);
    const auto global = smith_invariants(a);
    std::vector<unsigned> expect;
    for (const auto& f : global) expect.push_back(std::min(valuation(f, 3, 40), 40u));
    while (expect.size() < 4) expect.push_back(40);
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(local_smith_valuations(a, 3, 40), expect);
  }
}

TEST(SqrtRational, Arithmetic) {
  const auto r = SqrtRational::from_square(3);
  EXPECT_FALSE(r.is_rational());
  EXPECT_TRUE((r * r).is_rational());
  EXPECT_EQ((r * r).value(), 3);
  EXPECT_EQ(SqrtRational::from_value(Rational(2, 3)).square(), Rational(4, 9));
  EXPECT_EQ(r.inverse().square(), Rational(1, 3));
  EXPECT_EQ(r.pow(-4).value(), Rational(1, 9));
  EXPECT_EQ(rational_pow(Rational(2, 3), -2), Rational(9, 4));
}

TEST(Matrix, ShapeErrors) {
  EXPECT_THROW(IntMatrix(2, 2, std::vector<Integer>(3)), ValidationError);
  EXPECT_THROW(IntMatrix(2, 3) * IntMatrix(2, 3), ValidationError);
  EXPECT_THROW(inverse(RationalMatrix(2, 2)), ValidationError);
}
