#include "torsionlab/local/experiment.hpp"

#include <algorithm>
#include <random>

#include "torsionlab/linalg/smith.hpp"
#include "torsionlab/util/parallel.hpp"

namespace torsionlab {

namespace {

Integer power(const Integer& p, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
  return r;
}

// Random unimodular matrix: permutation times unitriangular factors.
IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(-3, 3);
  IntMatrix lo = IntMatrix::identity(n), up = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lo(i, j) = small(rng);
      up(j, i) = small(rng);
    }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  IntMatrix pm(n, n);
  for (std::size_t i = 0; i < n; ++i) pm(i, perm[i]) = 1;
  return pm * lo * up;
}

void reduce_rows(IntMatrix& m, const Integer& modulus) {
  for (auto& x : m.data()) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
}

// Row lattice containing p^t·Z^n, closed under v ↦ v·gᵀ for all closure gens.
std::optional<IntMatrix> close_lattice(IntMatrix rows, const std::vector<IntMatrix>& gens_t, const Integer& modulus,
                                       unsigned max_iter, unsigned& iterations) {
  const std::size_t n = rows.cols();
  IntMatrix floor_rows = scale(IntMatrix::identity(n), modulus);
  IntMatrix h = hermite_normal_form(vconcat(rows, floor_rows));
  for (iterations = 1; iterations <= max_iter; ++iterations) {
    IntMatrix all = h;
    for (const auto& gt : gens_t) {
      IntMatrix img = h * gt;
      reduce_rows(img, modulus);
      all = vconcat(all, img);
    }
    IntMatrix next = hermite_normal_form(vconcat(all, floor_rows));
    if (next == h) return h;
    h = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

BoundReport bound_experiment(const Integer& q, unsigned k, std::size_t samples, std::uint64_t seed,
                             const BoundOptions& opts) {
  require(samples >= 1, "samples must be at least 1");
  require(opts.t >= 2, "precision t must be at least 2");
  require(opts.C > 0, "constant C must be positive");
  LocalParams lp = LocalParams::from_q(q, opts.t);

  BoundReport rep;
  rep.q = q;
  rep.k = k;
  rep.seed = seed;
  rep.options = opts;
  rep.bound = opts.C * (Rational(k, 1) / Rational(q) + 1);

  const unsigned prec = 2 * opts.t;
  const Integer mod_t = power(lp.p, opts.t);
  auto gens = standard_generators(lp, k, prec);
  std::vector<IntMatrix> closure_t;  // transposes mod p^t, acting on rows
  for (const auto& g : gens) {
    IntMatrix gt = transpose(g);
    reduce_rows(gt, mod_t);
    closure_t.push_back(std::move(gt));
  }
  if (lp.f > 1) closure_t.push_back(transpose(theta_action(lp, k, prec)));
  const std::size_t n = gens.front().rows();

  rep.standard = largest_invariant_quotient(LocalLattice::standard(n), gens, lp);

  rep.samples.resize(samples);
  std::uniform_int_distribution<unsigned> expo(0, opts.t / 3);
  parallel_for(samples, opts.threads == 0 ? default_threads() : opts.threads, [&](std::size_t i) {
    std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                     static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    std::mt19937_64 rng(ss);
    BoundSample& s = rep.samples[i];
    s.index = i;
    IntMatrix d(n, n);
    for (std::size_t r = 0; r < n; ++r) d(r, r) = power(lp.p, expo(rng));
    IntMatrix start = random_unimodular(n, rng) * d * random_unimodular(n, rng);
    auto h = close_lattice(transpose(start), closure_t, mod_t, opts.max_iter, s.closure_iterations);
    if (!h) {
      s.rejected = true;
      return;
    }
    QuotientReport qr = largest_invariant_quotient(LocalLattice{transpose(*h)}, gens, lp);
    s.exhausted = qr.exhausted;
    s.ln_q_order = qr.ln_q_order;
    s.valuations = qr.valuations;
  });

  for (const auto& s : rep.samples) {
    if (s.rejected || s.exhausted) continue;
    if (rep.valid == 0 || s.ln_q_order > rep.max_ln_q) rep.max_ln_q = s.ln_q_order;
    ++rep.valid;
  }
  if (rep.valid > 0) {
    rep.fitted_C = rep.max_ln_q / (Rational(k, 1) / Rational(q) + 1);
    rep.within_bound = rep.max_ln_q <= rep.bound;
  }
  return rep;
}

}  // namespace torsionlab
