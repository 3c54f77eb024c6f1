#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "torsionlab/homology/complex.hpp"
#include "torsionlab/homology/group_rep.hpp"
#include "torsionlab/linalg/smith.hpp"
#include "torsionlab/manifold/spec.hpp"

namespace torsionlab {

/// C^q(K; M) with each entry Σ n_w·w replaced by the block Σ n_w·ρ(w).
/// The spec relators must map to I exactly; d∘d = 0 is verified.
IntCochainComplex evaluate(const TwistedComplexSpec& spec, const GroupRepZ& rep);

struct EulerReport {
  long cell_sum = 0;  // Σ(−1)^q cells_q
  long rank_sum = 0;  // Σ(−1)^q rank C^q
  bool consistent = false;  // rank_sum = dim V · cell_sum
  bool passed = false;
};

EulerReport euler_check(const TwistedComplexSpec& spec, const GroupRepZ& rep);

struct TopDegreeReport {
  CokernelStructure top;
  CokernelStructure coinvariants;
  bool equal = false;
};

/// H^dim(X; M) against M_Γ, for closed oriented specs.
TopDegreeReport h3_cross_check(const TwistedComplexSpec& spec, const GroupRepZ& rep);

struct LatticeIndependenceReport {
  Rational alternating_m;      // Π_q |H^q(M)_tors|^{(−1)^q}
  Rational alternating_sub;    // same for M′
  std::vector<std::size_t> free_ranks;
  bool acyclic = false;  // all free ranks vanish
  bool equal = false;
};

/// M′ = S·M for a full-rank integer matrix S (columns span M′ in M's basis).
/// Fails with ValidationError unless S⁻¹ρ(g)S is integral for every g.
LatticeIndependenceReport lattice_independence_check(const TwistedComplexSpec& spec, const GroupRepZ& rep,
                                                     const IntMatrix& sublattice);

/// ρ restricted to the sublattice S·M, in the basis given by the columns of S.
GroupRepZ restrict_to_sublattice(const GroupRepZ& rep, const IntMatrix& sublattice);

struct SweepEntry {
  unsigned k = 0;
  std::vector<std::size_t> free_ranks;
  std::vector<Integer> torsion_orders;
  std::vector<Real> log_torsion;
  Real alternating;  // Σ_q (−1)^q ln|H^q_tors|
  bool h0_vanishes = false;
};

struct QuadraticFit {
  Real c2, c1, c0;
  Real c2_stderr;
  Real rms_residual;
};

struct SweepReport {
  std::string spec_name;
  std::vector<SweepEntry> entries;
  std::optional<QuadraticFit> fit;  // needs at least three levels
  std::optional<Real> target;       // 2·vol/π when a volume is known and χ = 0
  long euler_characteristic = 0;
};

using RepFamily = std::function<GroupRepZ(unsigned k)>;

/// k ↦ Sym^{2k} of the spec's sweep generators.
RepFamily sym_pow_family(const TwistedComplexSpec& spec);

/// Evaluates levels kmin..kmax in parallel (exact parts only) and fits
/// alternating ≈ c2·k² + c1·k + c0 by least squares.
SweepReport torsion_sweep(const TwistedComplexSpec& spec, const RepFamily& family, unsigned kmin, unsigned kmax,
                          unsigned threads = 0);

QuadraticFit fit_quadratic(const std::vector<Real>& x, const std::vector<Real>& y);

}  // namespace torsionlab
