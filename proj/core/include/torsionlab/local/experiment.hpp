#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "torsionlab/local/quotient.hpp"

namespace torsionlab {

struct BoundOptions {
  unsigned t = 12;
  Rational C = 16;
  unsigned max_iter = 64;
  unsigned threads = 0;  // 0 picks default_threads()
};

struct BoundSample {
  std::uint64_t index = 0;
  bool rejected = false;   // closure did not stabilise
  bool exhausted = false;  // some factor reached p^t
  Rational ln_q_order;
  std::vector<unsigned> valuations;
  unsigned closure_iterations = 0;
};

struct BoundReport {
  Integer q;
  unsigned k = 0;
  std::uint64_t seed = 0;
  BoundOptions options;
  std::vector<BoundSample> samples;
  Rational max_ln_q;            // over valid samples
  std::optional<Rational> fitted_C;  // max / (k/q + 1)
  Rational bound;               // C·(k/q + 1)
  bool within_bound = true;
  std::size_t valid = 0;
  QuotientReport standard;      // the standard lattice itself
};

/// Random G-stable lattices in Sym^{2k} over the unramified O with residue
/// field F_q, each closed under the standard generators over Z/p^t, with the
/// exponent ln_q|L:L′| of each. Sample i draws from its own stream derived
/// from (seed, i), so results do not depend on the thread count.
BoundReport bound_experiment(const Integer& q, unsigned k, std::size_t samples, std::uint64_t seed,
                             const BoundOptions& opts = {});

}  // namespace torsionlab
