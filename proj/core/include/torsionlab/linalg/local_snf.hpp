#pragma once

#include <vector>

#include "torsionlab/linalg/matrix.hpp"

namespace torsionlab {

/// p-adic valuation of a nonzero integer; `cap` for zero.
unsigned valuation(const Integer& x, const Integer& p, unsigned cap);

/// Smith form over Z/p^t. Returns the valuations of the min(rows, cols)
/// diagonal entries in ascending order, with t standing for a zero entry.
std::vector<unsigned> local_smith_valuations(const IntMatrix& a, const Integer& p, unsigned t);

/// Valuations of the cyclic factors of coker(A) ⊆ (Z/p^t)^rows, one per row
/// (rows beyond the column count contribute t).
std::vector<unsigned> local_cokernel_valuations(const IntMatrix& a, const Integer& p, unsigned t);

/// log_p of |ker A| for A acting on (Z/p^t)^cols.
unsigned local_kernel_exponent(const IntMatrix& a, const Integer& p, unsigned t);

/// Reduces all entries into [0, m).
IntMatrix reduce_mod(const IntMatrix& a, const Integer& m);

/// Inverse of a unit modulo m; throws ValidationError when not a unit.
Integer inverse_mod(const Integer& a, const Integer& m);

}  // namespace torsionlab
