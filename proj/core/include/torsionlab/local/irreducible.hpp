#pragma once

#include <optional>

#include "torsionlab/linalg/matrix.hpp"

namespace torsionlab {

struct IrreducibilityReport {
  /// ρ(N) − I strictly upper and ρ(N̄) − I strictly lower triangular with
  /// every super/subdiagonal entry nonzero in F_q.
  bool structural = false;
  /// Result of the orbit-span enumeration, when the space is small enough.
  std::optional<bool> exhaustive;
};

/// Irreducibility of Sym^d(F_q²) under SL(2, F_q). The enumeration runs when
/// q^{d+1} ≤ exhaustive_limit.
IrreducibilityReport sym_pow_irreducibility(const Integer& q, unsigned d, unsigned long exhaustive_limit = 4096);

/// The structural verdict.
bool sym_pow_irreducible_Fq(const Integer& q, unsigned d);

}  // namespace torsionlab
