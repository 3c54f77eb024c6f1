#pragma once

#include <cstddef>
#include <vector>

#include "torsionlab/linalg/matrix.hpp"

namespace torsionlab {

/// Smith normal form U·A·V = S of an integer matrix.
///
/// U (rows×rows) and V (cols×cols) are unimodular; S is diagonal with a
/// nonnegative divisibility chain s₁ | s₂ | … on its leading `rank()` entries.
struct SmithForm {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  std::vector<Integer> invariant_factors;  // nonzero diagonal of S, positive

  std::size_t rank() const noexcept { return invariant_factors.size(); }
};

/// Minimal-absolute-value pivoting with row/column gcd reduction; pivot ties
/// break on the smallest row index, then the smallest column index, so the
/// output is a pure function of the input.
SmithForm smith_normal_form(const IntMatrix& a);

/// The invariant factors alone (skips the transform bookkeeping).
std::vector<Integer> smith_invariants(const IntMatrix& a);

/// Structure of coker(A: Z^cols → Z^rows): Z^free_rank ⊕ ⊕ Z/fᵢ with fᵢ > 1.
struct CokernelStructure {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion_factors;

  friend bool operator==(const CokernelStructure&, const CokernelStructure&) = default;
};

CokernelStructure cokernel_invariants(const IntMatrix& a, std::size_t ambient_rank);

/// Z-basis of the right kernel (columns), taken from the trailing columns of V.
/// The returned lattice is saturated in Z^cols.
IntMatrix integer_kernel_basis(const IntMatrix& a);

/// Row-style Hermite normal form of the row lattice of `a`: echelon form with
/// positive pivots, entries above each pivot reduced into [0, pivot), zero rows
/// removed.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Whether `v` lies in the row lattice of an HNF basis.
bool hnf_contains(const IntMatrix& hnf, std::span<const Integer> v);

/// Coefficients c with cᵀ·hnf = v, or empty if v is not in the lattice.
std::vector<Integer> hnf_coordinates(const IntMatrix& hnf, std::span<const Integer> v, bool* ok);

}  // namespace torsionlab
