#include <gtest/gtest.h>

#include "support.hpp"
#include "torsionlab/io/json_io.hpp"
#include "torsionlab/local/experiment.hpp"
#include "torsionlab/local/irreducible.hpp"
#include "torsionlab/local/partition.hpp"
#include "torsionlab/local/quotient.hpp"
#include "torsionlab/sympow/sym_pow.hpp"

using namespace torsionlab;
using testing_support::Rng;

namespace {

std::vector<IntMatrix> trivial_gens(std::size_t n) { return {IntMatrix::identity(n)}; }

}  // namespace

TEST(Partition, Examples) {
  auto e = eigen_partition(3, 3, 1);
  EXPECT_EQ(e.dim_inf, 1u);
  ASSERT_GE(e.dims.size(), 2u);
  EXPECT_EQ(e.dims[0], 0u);
  EXPECT_EQ(e.dims[1], 2u);
  EXPECT_EQ(e.total(), 3u);

  e = eigen_partition(11, 11, 2);  // q − 1 = 10 > 4k
  EXPECT_EQ(e.dims[0], 4u);
  EXPECT_EQ(e.dim_inf, 1u);
  for (std::size_t i = 1; i < e.dims.size(); ++i) EXPECT_EQ(e.dims[i], 0u);

  EXPECT_THROW(eigen_partition(6, 2, 1), ValidationError);
  EXPECT_THROW(LocalParams::from_q(12), ValidationError);
}

TEST(Partition, SumsToDimension) {
  for (long q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49})
    for (unsigned k = 0; k <= 60; k += 3) {
      const auto lp = LocalParams::from_q(q);
      const auto e = eigen_partition(q, lp.p, k);
      EXPECT_EQ(e.total(), 2 * k + 1);
      EXPECT_EQ(e.dim_inf, 1u);
    }
}

TEST(Partition, IndexMatchesEigenvalueOrder) {
  for (long q : {3, 4, 5, 7, 8, 9, 25}) {
    const auto lp = LocalParams::from_q(q);
    const unsigned k = 30;
    const auto e = eigen_partition(q, lp.p, k);
    const GRElem a = admissible_root(lp, 24);
    for (long t = -static_cast<long>(k); t <= static_cast<long>(k); ++t)
      EXPECT_EQ(eigen_order(a, t), e.index[static_cast<std::size_t>(t + k)]) << "q=" << q << " t=" << t;
  }
}

TEST(Partition, DyadicAnomalyAtTwo) {
  // Over Z_2 squaring adds a factor of 2: ord(a^{2t} − 1) = index + 1 for t ≠ 0.
  const auto lp = LocalParams::from_q(2);
  const auto e = eigen_partition(2, 2, 4);
  const GRElem a = admissible_root(lp, 24);
  for (long t = 1; t <= 4; ++t) EXPECT_EQ(*eigen_order(a, t), *e.index[static_cast<std::size_t>(t + 4)] + 1);
}

TEST(Partition, AdmissibleRoot) {
  for (long q : {3, 5, 9, 25}) {
    const auto lp = LocalParams::from_q(q);
    const GRElem a = admissible_root(lp, 6);
    EXPECT_TRUE(a.is_unit());
    const GRElem u = a.pow(q - 1) - GRElem(a.context(), Integer(1));
    EXPECT_EQ(gr_valuation(u), 1u) << q;
  }
}

TEST(Projector, Example) {
  EXPECT_EQ(endo_projector(2, 1, 3, 0), IntMatrix(3, 3, std::vector<Integer>{0, 0, 0, 0, -2, 0, 0, 0, 0}));
  const IntMatrix p0 = endo_projector(3, 0, 4, 0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != 0 || j != 0) EXPECT_EQ(p0(i, j), 0);
  EXPECT_NE(p0(0, 0), 0);
}

TEST(Projector, AtMostOneDiagonalEntry) {
  Rng rng(51);
  const std::vector<long> primes{2, 3, 5, 7, 11, 13};
  for (int rep = 0; rep < 500; ++rep) {
    const long p = primes[static_cast<std::size_t>(rng.uniform(0, 5))];
    const auto t = static_cast<unsigned long>(rng.uniform(1, 4));
    Integer m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p), t);
    Integer gamma;
    do gamma = rng.uniform(1, m.get_si() - 1);
    while (gcd(gamma, m) != 1);
    const auto k = static_cast<unsigned>(rng.uniform(0, 6));
    const auto j = static_cast<unsigned>(rng.uniform(0, 2 * k));
    const IntMatrix a = endo_projector(gamma, j, 2 * k + 1, m);
    Integer direct = 1;
    Integer gj;
    mpz_powm_ui(gj.get_mpz_t(), gamma.get_mpz_t(), j, m.get_mpz_t());
    for (unsigned i = 0; i <= 2 * k; ++i) {
      if (i == j) continue;
      Integer gi;
      mpz_powm_ui(gi.get_mpz_t(), gamma.get_mpz_t(), i, m.get_mpz_t());
      direct = (direct * (gj - gi)) % m;
    }
    if (direct < 0) direct += m;
    std::size_t nonzero = 0;
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (a(r, c) != 0) {
          ++nonzero;
          EXPECT_EQ(r, c);
          EXPECT_EQ(r, j);
        }
    EXPECT_LE(nonzero, 1u);
    EXPECT_EQ(a(j, j), direct);
  }
}

TEST(Quotient, TrivialGeneratorsGiveWholeLattice) {
  for (long q : {3, 9}) {
    const auto lp = LocalParams::from_q(q, 6);
    const unsigned k = 2;
    const std::size_t n = lp.f * (2 * k + 1);
    const auto r = largest_invariant_quotient(LocalLattice::standard(n), trivial_gens(n), lp);
    EXPECT_TRUE(r.exhausted);
    EXPECT_EQ(r.log_p_order, 6u * n);
    EXPECT_EQ(r.ln_q_order, Rational(6 * (2 * k + 1)));
  }
}

TEST(Quotient, StandardLatticeTrivialWhenPLarge) {
  for (long p : {3, 5, 7, 11}) {
    const auto lp = LocalParams::from_q(p, 8);
    for (unsigned k = 1; 2 * k < static_cast<unsigned>(p); ++k) {
      const auto gens = standard_generators(lp, k, lp.t);
      const auto r = largest_invariant_quotient(LocalLattice::standard(2 * k + 1), gens, lp);
      EXPECT_EQ(r.log_p_order, 0u) << "p=" << p << " k=" << k;
      EXPECT_FALSE(r.exhausted);
    }
  }
  const auto lp = LocalParams::from_q(9, 6);
  const auto r = largest_invariant_quotient(LocalLattice::standard(2 * 3), standard_generators(lp, 1, 6), lp);
  EXPECT_EQ(r.log_p_order, 0u);
}

TEST(Quotient, DyadicStandardLatticeGolden) {
  const auto lp = LocalParams::from_q(2, 8);
  const auto r = largest_invariant_quotient(LocalLattice::standard(3), standard_generators(lp, 1, 8), lp);
  const Json golden = read_json_file(std::string(TORSIONLAB_GOLDEN_DIR) + "/local_quotient_k1_p2_t8.json");
  EXPECT_EQ(r.valuations, golden["valuations"].get<std::vector<unsigned>>());
  EXPECT_EQ(r.log_p_order, golden["log_p_order"].get<unsigned>());
  EXPECT_EQ(r.ln_q_order, parse_rational(golden["ln_q_order"].get<std::string>()));
  EXPECT_EQ(r.exhausted, golden["exhausted"].get<bool>());
}

TEST(Quotient, UnstableLatticeRejected) {
  const auto lp = LocalParams::from_q(3, 6);
  IntMatrix b = IntMatrix::identity(3);
  b(0, 0) = 3;
  EXPECT_THROW(largest_invariant_quotient({b}, {sym_pow(IntMatrix(2, 2, std::vector<Integer>{1, 1, 0, 1}), 2)}, lp),
               ValidationError);
}

TEST(Quotient, ThetaActionIsIdentityOverPrimeField) {
  const auto lp = LocalParams::from_q(5, 4);
  EXPECT_EQ(theta_action(lp, 2, 4), IntMatrix::identity(5));
  const auto lq = LocalParams::from_q(9, 4);
  EXPECT_EQ(theta_action(lq, 1, 4).rows(), 6u);
}

TEST(Irreducible, ExamplesAndSmallPrimes) {
  EXPECT_TRUE(sym_pow_irreducible_Fq(5, 4));
  EXPECT_TRUE(sym_pow_irreducible_Fq(2, 1));
  const auto r = sym_pow_irreducibility(3, 2);
  EXPECT_TRUE(r.structural);
  ASSERT_TRUE(r.exhaustive.has_value());
  EXPECT_TRUE(*r.exhaustive);
  for (long q : {2, 3, 4, 5, 7, 9, 25}) {
    const auto p = LocalParams::from_q(q).p.get_ui();
    for (unsigned d = 0; d < p; ++d) EXPECT_TRUE(sym_pow_irreducible_Fq(q, d)) << q << "," << d;
  }
}

TEST(Irreducible, ExhaustiveAgreementForSmallFields) {
  for (long q : {2, 3, 4}) {
    for (unsigned d = 0; d <= 3; ++d) {
      const auto r = sym_pow_irreducibility(q, d);
      ASSERT_TRUE(r.exhaustive.has_value());
      if (q == 4 && d == 3) {
        // Steinberg module: irreducible, but the triangular criterion misses it.
        EXPECT_FALSE(r.structural);
        EXPECT_TRUE(*r.exhaustive);
      } else {
        EXPECT_EQ(r.structural, *r.exhaustive) << q << "," << d;
      }
    }
  }
}

TEST(H1Bound, Examples) {
  EXPECT_EQ(h1_invariant_bound(trivial_gens(5), 5, 3, 4).log_p, 20u);
  IntMatrix minus = IntMatrix::identity(2);
  minus(0, 0) = -1;
  minus(1, 1) = -1;
  EXPECT_EQ(h1_invariant_bound({sym_pow(minus, 2)}, 3, 5, 4).log_p, 12u);
  const auto lp = LocalParams::from_q(7, 6);
  const auto r = h1_invariant_bound(standard_generators(lp, 2, 6), 5, 7, 6);
  EXPECT_EQ(r.order, Integer(1));
}

TEST(H1Bound, MonotoneInPrecision) {
  for (long q : {2, 3, 5}) {
    const auto lp = LocalParams::from_q(q, 12);
    const unsigned k = 3;
    const auto gens = standard_generators(lp, k, 12);
    unsigned prev = 0;
    for (unsigned t = 1; t <= 12; ++t) {
      const auto r = h1_invariant_bound(gens, 2 * k + 1, lp.p, t);
      EXPECT_GE(r.log_p, prev) << "q=" << q << " t=" << t;
      prev = r.log_p;
    }
  }
}

TEST(BoundExperiment, ValidatesAndIsThreadIndependent) {
  EXPECT_THROW(bound_experiment(3, 1, 0, 1), ValidationError);
  BoundOptions one;
  one.t = 8;
  one.threads = 1;
  BoundOptions four = one;
  four.threads = 4;
  const auto a = bound_experiment(3, 2, 12, 99, one);
  const auto b = bound_experiment(3, 2, 12, 99, four);
  ASSERT_EQ(a.samples.size(), b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    EXPECT_EQ(a.samples[i].ln_q_order, b.samples[i].ln_q_order);
    EXPECT_EQ(a.samples[i].valuations, b.samples[i].valuations);
  }
  EXPECT_EQ(a.max_ln_q, b.max_ln_q);
}

TEST(BoundExperiment, StandardLatticeAndBound) {
  BoundOptions o;
  o.t = 8;
  const auto r = bound_experiment(7, 2, 10, 5, o);
  EXPECT_EQ(r.standard.log_p_order, 0u);
  EXPECT_EQ(r.bound, Rational(16) * (Rational(2, 7) + 1));
  EXPECT_TRUE(r.within_bound);
  EXPECT_EQ(r.valid, r.samples.size());
}
