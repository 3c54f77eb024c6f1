#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "torsionlab/sympow/rings.hpp"

namespace torsionlab {

/// Unramified local data: O/ϖ = F_q with q = p^f, ϖ = p, working ring Z/p^t.
struct LocalParams {
  Integer p;
  unsigned f = 1;
  Integer q;
  unsigned t = 12;

  /// Validates q = p^f with p prime.
  static LocalParams from_q(const Integer& q, unsigned t = 12);
};

/// Splits the weights t ∈ {−k, …, k} of Sym^{2k} under T = diag(a, a⁻¹):
/// t = 0 goes to V_∞, 2t ≢ 0 (mod q−1) to V_0, and otherwise t lands in V_i
/// with 2t = j(q−1)p^{i−1}, p ∤ j.
struct EigenPartition {
  unsigned k = 0;
  std::size_t dim_inf = 0;
  std::vector<std::size_t> dims;  // dims[i] = dim V_i
  /// index[t + k] = i, or nullopt for V_∞.
  std::vector<std::optional<unsigned>> index;

  std::size_t total() const;
};

EigenPartition eigen_partition(const Integer& q, const Integer& p, unsigned k);

/// First a (coefficient vectors in [0, p²)^f, lexicographic from the constant
/// term) whose residue generates F_q^× and with a^{q−1} ∉ 1 + p²O. For p = 2
/// and q ≥ 4 it additionally requires (a^{q−1} − 1)/2 mod p ∉ F_2, which is
/// what makes ord(a^{2t} − 1) follow the partition rule. The element lives in
/// GR(p^prec, f).
GRElem admissible_root(const LocalParams& lp, unsigned prec);

/// ϖ-adic valuation of an element of GR(p^s, f), s for zero.
unsigned gr_valuation(const GRElem& x);

/// ord_ϖ(a^{2t} − 1) computed in GR(p^prec, f); nullopt when it vanishes to
/// the working precision (the t = 0 case).
std::optional<unsigned> eigen_order(const GRElem& a, long t);

}  // namespace torsionlab
