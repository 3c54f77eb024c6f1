#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torsionlab/io/json_io.hpp"
#include "torsionlab/linalg/smith.hpp"
#include "torsionlab/util/words.hpp"

namespace torsionlab {

/// A representation of a finitely presented group on Z^m, given by the
/// images of the generators.
struct GroupRepZ {
  std::vector<IntMatrix> generators;
  std::vector<Word> relators;
  bool unimodular = true;

  std::size_t dim() const { return generators.empty() ? 0 : generators.front().rows(); }

  /// Square, equal sizes, |det| = 1 when unimodular, relators map to I.
  void validate() const;
  /// ρ(w); negative powers need unimodular generators.
  IntMatrix evaluate(const Word& w) const;
};

/// {"generators":[matrix,...], "relators":["g0 g1^-1",...], "unimodular":true}
/// Relator words use generator names g0, g1, … unless "names" is given.
GroupRepZ group_rep_from_json(const Json& j);
Json to_json(const GroupRepZ& rep);

/// Exact integer inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& g);

/// M_Γ = M / Σ_i (g_i − 1) M.
CokernelStructure coinvariants(const GroupRepZ& rep);

struct InvariantsResult {
  /// Integral case: rank of M^Γ. Modular case: 0.
  std::size_t free_rank = 0;
  /// Modular case: |(M/NM)^Γ|. Integral case: 1.
  Integer order = 1;
};

/// M^Γ over Z, or (M/NM)^Γ when a modulus N ≥ 2 is given.
InvariantsResult invariants(const GroupRepZ& rep, std::optional<Integer> modulus = std::nullopt);

}  // namespace torsionlab
