#pragma once

#include <vector>

#include "torsionlab/linalg/matrix.hpp"
#include "torsionlab/sympow/rings.hpp"

namespace torsionlab {

struct SaturationOptions {
  unsigned max_iter = 64;
  unsigned denom_bits = 256;  // failure once a denominator exceeds 2^denom_bits
};

/// Smallest lattice containing Z^m that is stable under every generator and
/// its inverse, as a row-style HNF basis (rows are lattice vectors, g acts on
/// column vectors). Throws SaturationFailure when the iteration or
/// denominator budget is exhausted; the result is re-checked for stability
/// by membership before it is returned.
RationalMatrix saturate_stable_lattice(const std::vector<RationalMatrix>& gens, const SaturationOptions& opt = {});

/// Same for generators over Q(√−d): they are restricted to Q^{2m} through the
/// integral basis (1, ω), and multiplication by ω is added so the result is
/// an O_F-lattice.
RationalMatrix saturate_stable_lattice(const std::vector<Matrix<QuadElem>>& gens,
                                       const SaturationOptions& opt = {});

/// Whether g maps the row lattice of `basis` into itself.
bool lattice_is_stable(const RationalMatrix& basis, const RationalMatrix& g);

}  // namespace torsionlab
