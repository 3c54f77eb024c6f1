#pragma once

#include <vector>

#include "torsionlab/linalg/matrix.hpp"
#include "torsionlab/local/partition.hpp"

namespace torsionlab {

/// A lattice L between p^t·Z_p^n and Q_p^n, given by a basis (columns) with
/// integer entries, so that L ⊆ Z_p^n. For an O-lattice with f > 1 the
/// coordinates are the restriction of scalars of O^{2k+1}.
struct LocalLattice {
  IntMatrix basis;

  static LocalLattice standard(std::size_t n) { return {IntMatrix::identity(n)}; }
};

/// Structure of L/L′ with L′ = Σ_g (g − 1)L, computed over Z/p^t.
struct QuotientReport {
  std::vector<unsigned> valuations;  // nonzero factor exponents, ascending
  unsigned log_p_order = 0;
  Rational ln_q_order;  // log_p_order / f
  /// Some factor reached p^t, so the quotient may be infinite.
  bool exhausted = false;
  /// Largest p-power in the denominators of B⁻¹. Generators must be known
  /// modulo p^{t + basis_defect} for the result to be exact mod p^t.
  unsigned basis_defect = 0;
};

/// Fails with ValidationError when B⁻¹gB is not p-integral for some g.
QuotientReport largest_invariant_quotient(const LocalLattice& lattice, const std::vector<IntMatrix>& gens,
                                          const LocalParams& lp);

/// Sym^{2k} images of T = diag(a, a⁻¹), N, N̄ (and N(θ^i), N̄(θ^i) for
/// 1 ≤ i < f) over GR(p^prec, f), restricted to integer matrices of size
/// f(2k+1) with entries in [0, p^prec). `a` is the admissible root.
std::vector<IntMatrix> standard_generators(const LocalParams& lp, unsigned k, unsigned prec);

/// Multiplication by θ on O^{2k+1}, restricted to Z_p; identity when f = 1.
IntMatrix theta_action(const LocalParams& lp, unsigned k, unsigned prec);

/// p_j(A) for A = diag(1, γ, …, γ^{size−1}) and p_j(z) = Π_{i≠j}(z − γ^i).
/// With modulus 0 the entries are plain integers, otherwise reduced into
/// [0, modulus).
IntMatrix endo_projector(const Integer& gamma, unsigned j, unsigned size, const Integer& modulus);

struct InvariantsOrder {
  unsigned log_p = 0;
  Integer order;
};

/// Order of the fixed points of the generators on (Z/p^t)^n.
InvariantsOrder h1_invariant_bound(const std::vector<IntMatrix>& gens, std::size_t n, const Integer& p, unsigned t);

}  // namespace torsionlab
