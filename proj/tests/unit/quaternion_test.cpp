#include <gtest/gtest.h>

#include "oracles/hilbert_search.hpp"
#include "support.hpp"
#include "torsionlab/quaternion/algebra.hpp"
#include "torsionlab/quaternion/hilbert.hpp"
#include "torsionlab/quaternion/number_theory.hpp"
#include "torsionlab/quaternion/order.hpp"
#include "torsionlab/util/fp_poly.hpp"

using namespace torsionlab;
using testing_support::Rng;

namespace {

QuaternionAlgebra hamilton() { return QuaternionAlgebra(0, QuadElem(-1), QuadElem(-1)); }

QuatElement element(const QuaternionAlgebra& alg, long x0, long x1, long x2, long x3) {
  return QuatElement(alg, {QuadElem(x0), QuadElem(x1), QuadElem(x2), QuadElem(x3)});
}

QuadElem random_field(Rng& rng, long d, long bound) {
  Rational u(rng.uniform(-bound, bound), rng.uniform(1, 4));
  Rational v(d == 0 ? 0 : rng.uniform(-bound, bound), rng.uniform(1, 4));
  u.canonicalize();
  v.canonicalize();
  if (d == 0) return QuadElem(u);
  return QuadElem(u, v, d);
}

QuatElement random_element(Rng& rng, const QuaternionAlgebra& alg) {
  return QuatElement(alg, {random_field(rng, alg.d, 6), random_field(rng, alg.d, 6), random_field(rng, alg.d, 6),
                           random_field(rng, alg.d, 6)});
}

std::vector<std::string> labels(const std::vector<Place>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.label());
  return out;
}

long nonzero(Rng& rng, long bound) {
  long x = 0;
  while (x == 0) x = rng.uniform(-bound, bound);
  return x;
}

std::vector<Integer> primes_up_to(long n) {
  std::vector<Integer> out;
  for (long p = 2; p <= n; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace

TEST(QuatArithmetic, NormAndTrace) {
  const auto h = hamilton();
  const auto one = QuatElement::one(h);
  EXPECT_EQ(one.norm(), 1);
  EXPECT_EQ(one.trace(), 2);
  EXPECT_EQ(element(h, 0, 1, 0, 0).norm(), 1);
  EXPECT_EQ(element(h, 1, 1, 0, 0).norm(), 2);
  const auto i = element(h, 0, 1, 0, 0), j = element(h, 0, 0, 1, 0), k = element(h, 0, 0, 0, 1);
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * i, scale(QuadElem(-1), k));
  EXPECT_EQ(i * i, scale(QuadElem(-1), one));
}

TEST(QuatArithmetic, NormIsMultiplicative) {
  Rng rng(41);
  for (long d : {0L, 1L, 2L, 3L, 7L, 11L}) {
    const QuaternionAlgebra alg(d, random_field(rng, d, 5), random_field(rng, d, 5));
    for (int rep = 0; rep < 20; ++rep) {
      const auto x = random_element(rng, alg), y = random_element(rng, alg);
      EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
      EXPECT_EQ(x * x.conj(), scale(x.norm(), QuatElement::one(alg)));
      EXPECT_EQ((x + y).trace(), x.trace() + y.trace());
    }
  }
}

TEST(QuatArithmetic, MixedAlgebrasRejected) {
  const auto x = element(hamilton(), 1, 0, 0, 0);
  const auto y = element(QuaternionAlgebra(0, QuadElem(1), QuadElem(-1)), 1, 0, 0, 0);
  EXPECT_THROW(x * y, ValidationError);
  EXPECT_THROW(QuaternionAlgebra(0, QuadElem(0), QuadElem(1)), ValidationError);
  EXPECT_THROW(QuaternionAlgebra(5, QuadElem(1), QuadElem(1)), ValidationError);
}

TEST(Hilbert, SpecExamples) {
  EXPECT_EQ(hilbert_symbol_q(-1, -1, Place::infinity()), -1);
  EXPECT_EQ(hilbert_symbol_q(-1, -1, Place::rational(2)), -1);
  EXPECT_EQ(hilbert_symbol_q(3, 5, Place::rational(3)), -1);
  EXPECT_EQ(oracle::hilbert_by_search(-1, -1, 2, 10), -1);
  EXPECT_EQ(oracle::hilbert_by_search(3, 5, 3, 6), -1);
}

TEST(Hilbert, MatchesSearchOracle) {
  Rng rng(42);
  for (int rep = 0; rep < 150; ++rep) {
    const long a = nonzero(rng, 60), b = nonzero(rng, 60);
    for (long p : {2L, 3L, 5L, 7L}) {
      const unsigned k = p == 2 ? 10 : (p == 3 ? 6 : 4);
      EXPECT_EQ(hilbert_symbol_q(a, b, Place::rational(p)), oracle::hilbert_by_search(a, b, p, k))
          << "(" << a << "," << b << ")_" << p;
    }
  }
}

TEST(Hilbert, ProductFormulaOverQ) {
  Rng rng(43);
  for (int rep = 0; rep < 200; ++rep) {
    const Rational a(nonzero(rng, 100), rng.uniform(1, 100)), b(nonzero(rng, 100), rng.uniform(1, 100));
    int prod = hilbert_symbol_q(a, b, Place::infinity());
    for (const auto& p : primes_up_to(100)) prod *= hilbert_symbol_q(a, b, Place::rational(p));
    EXPECT_EQ(prod, 1) << a << ", " << b;
  }
}

TEST(Hilbert, RationalEntriesOverQuadraticField) {
  // For a, b ∈ Q, the symbol at a place above p equals (a, b)_p when p splits
  // and (a, N b)_p = 1 for inert or ramified places.
  Rng rng(44);
  for (long d : {1L, 2L, 3L, 7L, 11L}) {
    for (int rep = 0; rep < 20; ++rep) {
      const long a = nonzero(rng, 40), b = nonzero(rng, 40);
      for (long p : {3L, 5L, 7L, 11L, 13L}) {
        for (const auto& v : places_above(p, d)) {
          const int expect = v.kind == Place::Kind::Split ? hilbert_symbol_q(a, b, Place::rational(p)) : 1;
          EXPECT_EQ(hilbert_symbol(QuadElem(Rational(a), 0, d), QuadElem(Rational(b), 0, d), v), expect)
              << "d=" << d << " (" << a << "," << b << ") at " << v.label();
        }
      }
    }
  }
}

TEST(Hilbert, SteinbergRelationsOverQuadraticField) {
  Rng rng(45);
  for (long d : {1L, 2L, 3L, 7L, 11L}) {
    for (int rep = 0; rep < 15; ++rep) {
      const QuadElem a(rng.uniform(-9, 9), nonzero(rng, 9), d), b(nonzero(rng, 9), rng.uniform(-9, 9), d);
      const QuadElem c(nonzero(rng, 9), rng.uniform(-9, 9), d);
      for (long p : {3L, 5L, 13L}) {
        for (const auto& v : places_above(p, d)) {
          EXPECT_EQ(hilbert_symbol(a, -a, v), 1);
          EXPECT_EQ(hilbert_symbol(a, b, v), hilbert_symbol(b, a, v));
          EXPECT_EQ(hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v), hilbert_symbol(a, b * c, v));
          if (!(a == 1)) EXPECT_EQ(hilbert_symbol(a, QuadElem(1) - a, v), 1);
        }
      }
    }
  }
}

TEST(Ramification, Examples) {
  EXPECT_EQ(labels(ramification_set(hamilton())), (std::vector<std::string>{"inf", "2"}));
  EXPECT_TRUE(ramification_set(QuaternionAlgebra(0, QuadElem(1), QuadElem(7))).empty());
  EXPECT_TRUE(ramification_set(QuaternionAlgebra(1, QuadElem(-1), QuadElem(-1))).empty());
  EXPECT_TRUE(is_division(hamilton()));
  EXPECT_FALSE(is_division(QuaternionAlgebra(0, QuadElem(1), QuadElem(1))));
  EXPECT_FALSE(is_division(QuaternionAlgebra(1, QuadElem(-1), QuadElem(-1))));
}

TEST(Ramification, AlwaysEvenOverEveryField) {
  Rng rng(46);
  for (long d : {0L, 1L, 2L, 3L, 7L, 11L}) {
    for (int rep = 0; rep < 25; ++rep) {
      auto entry = [&] {
        const Rational u(nonzero(rng, 30)), v(rng.uniform(-3, 3));
        return d == 0 ? QuadElem(u) : QuadElem(u, v, d);
      };
      const QuadElem a = entry(), b = entry();
      const QuaternionAlgebra alg(d, a, b);
      EXPECT_EQ(ramification_set(alg).size() % 2, 0u) << "d=" << d;
    }
  }
}

TEST(Ramification, SquareEntrySplits) {
  Rng rng(47);
  for (int rep = 0; rep < 20; ++rep) {
    const long s = nonzero(rng, 12);
    const QuaternionAlgebra alg(0, QuadElem(s * s), QuadElem(Rational(nonzero(rng, 50))));
    EXPECT_TRUE(ramification_set(alg).empty());
  }
}

TEST(Places, ParseAndSplitting) {
  EXPECT_EQ(places_above(5, 1).size(), 2u);
  EXPECT_EQ(places_above(3, 1).size(), 1u);
  EXPECT_EQ(places_above(2, 7).size(), 2u);
  EXPECT_EQ(parse_place("inf", 0), Place::infinity());
  EXPECT_EQ(parse_place("7", 0), Place::rational(7));
  for (const auto& v : places_above(5, 1)) EXPECT_EQ(parse_place(v.label(), 1), v);
  EXPECT_THROW(parse_place("5", 1), ValidationError);
  EXPECT_THROW(parse_place("inf", 1), ValidationError);
  EXPECT_THROW(parse_place("9", 0), ValidationError);
}

TEST(Orders, NormOneCounts) {
  const auto lip = lipschitz_order();
  const auto hur = hurwitz_order();
  EXPECT_TRUE(order_validate(lip).valid);
  EXPECT_TRUE(order_validate(hur).valid);
  EXPECT_EQ(norm_one_search(lip, 1).size(), 8u);
  EXPECT_EQ(norm_one_search(hur, 1).size(), 24u);
  EXPECT_EQ(norm_one_search(hur, 2, 4).size(), 24u);
  for (const auto& u : norm_one_search(hur, 1)) EXPECT_EQ(u.norm(), 1);
}

TEST(Orders, ClosureFailureHasWitness) {
  const auto h = hamilton();
  QuatOrder bad{h, {QuatElement::one(h), element(h, 0, 1, 0, 0), element(h, 0, 0, 2, 0), element(h, 0, 0, 0, 3)}};
  const auto v = order_validate(bad);
  EXPECT_FALSE(v.valid);
  ASSERT_TRUE(v.witness.has_value());
  const auto [a, b] = *v.witness;
  const auto coords = order_coordinates(bad, bad.basis[a] * bad.basis[b]);
  ASSERT_TRUE(coords.has_value());
  bool integral = true;
  for (const auto& c : *coords) integral = integral && c.is_integral();
  EXPECT_FALSE(integral);
}

TEST(SplitEmbed, HomomorphismDetAndTrace) {
  Rng rng(48);
  for (long d : {0L, 1L, 3L}) {
    const QuaternionAlgebra alg(d, random_field(rng, d, 5), random_field(rng, d, 5));
    const auto one = split_embed(QuatElement::one(alg));
    EXPECT_EQ(one[0][0].s, 1);
    EXPECT_EQ(one[0][1].s, 0);
    EXPECT_EQ(one[1][1].s, 1);
    const auto i = QuatElement(alg, {QuadElem(0), QuadElem(1), QuadElem(0), QuadElem(0)});
    const auto j = QuatElement(alg, {QuadElem(0), QuadElem(0), QuadElem(1), QuadElem(0)});
    EXPECT_EQ(split_mul(split_embed(i), split_embed(j)), split_embed(i * j));
    EXPECT_EQ(split_mul(split_embed(j), split_embed(i)), split_embed(scale(QuadElem(-1), i * j)));
    for (int rep = 0; rep < 15; ++rep) {
      const auto x = random_element(rng, alg), y = random_element(rng, alg);
      EXPECT_EQ(split_mul(split_embed(x), split_embed(y)), split_embed(x * y));
      const auto det = split_det(split_embed(x));
      EXPECT_EQ(det.s, x.norm());
      EXPECT_EQ(det.t, 0);
      EXPECT_EQ(split_trace(split_embed(x)).s, x.trace());
    }
  }
}

TEST(NumberTheory, Helpers) {
  EXPECT_EQ(factorize(360), (std::vector<std::pair<mpz_class, unsigned>>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(legendre(2, 7), 1);
  EXPECT_EQ(legendre(3, 7), -1);
  const mpz_class r = sqrt_mod_prime(2, 7);
  EXPECT_EQ((r * r - 2) % 7, 0);
  const mpz_class h = hensel_sqrt(2, r, 7, 5);
  EXPECT_EQ((h * h - 2) % (7 * 7 * 7 * 7 * 7), 0);
  const mpz_class s = sqrt_2adic(17, 12);
  EXPECT_EQ((s * s - 17) % 4096, 0);
  EXPECT_TRUE(fp_irreducible({1, 1, 1}, 2));
  EXPECT_FALSE(fp_irreducible({1, 0, 1}, 2));
}
