#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torsionlab/quaternion/algebra.hpp"

namespace torsionlab {

/// The O_F-span (Z-span over Q) of four elements of a quaternion algebra.
struct QuatOrder {
  QuaternionAlgebra alg;
  std::vector<QuatElement> basis;
};

/// Lipschitz order Z⟨1, i, j, k⟩ in H(−1, −1; Q).
QuatOrder lipschitz_order();
/// Hurwitz order with basis 1, i, (1+i+j+k)/2, (1+i+j−k)/2 in H(−1, −1; Q).
QuatOrder hurwitz_order();

struct OrderValidation {
  bool valid = false;
  std::string reason;
  // Indices of a basis pair whose product leaves the span, when that is the failure.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Full rank, contains 1, each basis element integral, closed under products.
OrderValidation order_validate(const QuatOrder& o);

/// Coordinates of x in the basis over F, or nullopt when the basis is singular.
std::optional<std::array<QuadElem, 4>> order_coordinates(const QuatOrder& o, const QuatElement& x);

/// All x = Σ c_i b_i with c_i ∈ O_F of height ≤ bound (max |coordinate| in
/// the integral basis 1, ω) and N(x) = 1, in enumeration order.
std::vector<QuatElement> norm_one_search(const QuatOrder& o, unsigned height_bound, unsigned threads = 1);

}  // namespace torsionlab
