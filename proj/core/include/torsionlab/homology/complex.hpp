#pragma once

#include <cstddef>
#include <vector>

#include "torsionlab/io/json_io.hpp"
#include "torsionlab/linalg/matrix.hpp"
#include "torsionlab/linalg/numeric.hpp"

namespace torsionlab {

/// 0 → C^0 → C^1 → … → C^n → 0 with C^q = Z^{r_q} and d_q of shape r_{q+1}×r_q.
struct IntCochainComplex {
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> differentials;

  std::size_t length() const { return ranks.empty() ? 0 : ranks.size() - 1; }
  std::size_t degrees() const { return ranks.size(); }

  /// Shapes agree with ranks and every composite d_{q+1}·d_q vanishes.
  void validate() const;
};

IntCochainComplex complex_from_json(const Json& j);
Json to_json(const IntCochainComplex& c);

struct DegreeCohomology {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion_factors;
  Integer torsion_order = 1;
  Real log_torsion = 0;
};

struct CohomologyReport {
  std::vector<DegreeCohomology> degrees;

  /// Σ_q (−1)^q ln |H^q_tors|.
  Real alternating_log_torsion() const;
  /// Π_q |H^q_tors|^{(−1)^q}, exactly.
  Rational alternating_torsion() const;
};

/// H^q = ker d_q / im d_{q−1} as free rank plus invariant factors.
CohomologyReport cohomology(const IntCochainComplex& c);
/// Same, from precomputed Smith invariants of each d_q. Exact work only in
/// differential_invariants, so it can run off the main thread.
CohomologyReport cohomology(const IntCochainComplex& c, const std::vector<std::vector<Integer>>& factors);
std::vector<std::vector<Integer>> differential_invariants(const IntCochainComplex& c);

/// Per-degree inner products on C^q; an empty list means the standard ones.
using InnerProducts = std::vector<RationalMatrix>;

/// Δ_q = d_q^† d_q + d_{q−1} d_{q−1}^†, with d^† the adjoint for `inner`.
RationalMatrix combinatorial_laplacian(const IntCochainComplex& c, std::size_t q,
                                       const InnerProducts& inner = {});

}  // namespace torsionlab
