#include "torsionlab/quaternion/order.hpp"

#include "torsionlab/sympow/sym_pow.hpp"
#include "torsionlab/util/parallel.hpp"

namespace torsionlab {
namespace {

QuatElement elem(const QuaternionAlgebra& alg, Rational x0, Rational x1, Rational x2, Rational x3) {
  return QuatElement(alg, {QuadElem(x0), QuadElem(x1), QuadElem(x2), QuadElem(x3)});
}

bool in_ring_of_integers(const QuadElem& x) { return x.is_integral(); }

// Solve Σ c_i b_i = x over F by Gaussian elimination on the 4×4 coordinate system.
std::optional<std::array<QuadElem, 4>> solve(const std::vector<QuatElement>& basis, const QuatElement& x) {
  Matrix<QuadElem> m(4, 5);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m(i, j) = basis[j].x[i];
    m(i, 4) = x.x[i];
  }
  for (int k = 0; k < 4; ++k) {
    int p = k;
    while (p < 4 && m(p, k) == 0) ++p;
    if (p == 4) return std::nullopt;
    m.swap_rows(p, k);
    for (int i = 0; i < 4; ++i) {
      if (i == k || m(i, k) == 0) continue;
      QuadElem f = m(i, k) / m(k, k);
      for (int j = k; j < 5; ++j) m(i, j) -= f * m(k, j);
    }
  }
  std::array<QuadElem, 4> c;
  for (int i = 0; i < 4; ++i) c[i] = m(i, 4) / m(i, i);
  return c;
}

}  // namespace

QuatOrder lipschitz_order() {
  QuaternionAlgebra h(0, QuadElem(-1), QuadElem(-1));
  return {h, {elem(h, 1, 0, 0, 0), elem(h, 0, 1, 0, 0), elem(h, 0, 0, 1, 0), elem(h, 0, 0, 0, 1)}};
}

QuatOrder hurwitz_order() {
  QuaternionAlgebra h(0, QuadElem(-1), QuadElem(-1));
  Rational half(1, 2);
  return {h, {elem(h, 1, 0, 0, 0), elem(h, 0, 1, 0, 0), elem(h, half, half, half, half), elem(h, half, half, half, -half)}};
}

std::optional<std::array<QuadElem, 4>> order_coordinates(const QuatOrder& o, const QuatElement& x) {
  require(o.basis.size() == 4, "order basis must have four elements");
  return solve(o.basis, x);
}

OrderValidation order_validate(const QuatOrder& o) {
  OrderValidation r;
  if (o.basis.size() != 4) {
    r.reason = "basis must have four elements";
    return r;
  }
  for (const auto& b : o.basis)
    if (!(b.alg == o.alg)) {
      r.reason = "basis element from a different algebra";
      return r;
    }
  auto integral_coords = [&](const QuatElement& x) {
    auto c = solve(o.basis, x);
    if (!c) return false;
    for (const auto& ci : *c)
      if (!in_ring_of_integers(ci)) return false;
    return true;
  };
  if (!solve(o.basis, QuatElement::one(o.alg))) {
    r.reason = "basis is not of full rank";
    return r;
  }
  if (!integral_coords(QuatElement::one(o.alg))) {
    r.reason = "1 is not in the span";
    return r;
  }
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& b = o.basis[i];
    // Reduced characteristic polynomial x² − Tr(b)x + N(b) over O_F.
    if (!in_ring_of_integers(b.trace()) || !in_ring_of_integers(b.norm())) {
      r.reason = "basis element " + std::to_string(i) + " is not integral";
      return r;
    }
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!integral_coords(o.basis[i] * o.basis[j])) {
        r.reason = "product of basis elements " + std::to_string(i) + " and " + std::to_string(j) +
                   " leaves the span";
        r.witness = {i, j};
        return r;
      }
  r.valid = true;
  return r;
}

std::vector<QuatElement> norm_one_search(const QuatOrder& o, unsigned height_bound, unsigned threads) {
  auto check = order_validate(o);
  require(check.valid, "norm_one_search: not an order: " + check.reason);
  const long d = o.alg.d;
  const long h = static_cast<long>(height_bound);
  // Candidate coefficients c ∈ O_F of height ≤ h.
  std::vector<QuadElem> coeffs;
  if (d == 0) {
    for (long m = -h; m <= h; ++m) coeffs.emplace_back(m);
  } else {
    QuadElem omega = integral_generator(d);
    for (long m = -h; m <= h; ++m)
      for (long n = -h; n <= h; ++n) coeffs.push_back(QuadElem(Rational(m), 0, d) + QuadElem(n) * omega);
  }
  const std::size_t k = coeffs.size();
  // Slabs over the first coefficient; results concatenated in slab order.
  std::vector<std::vector<QuatElement>> found(k);
  parallel_for(k, threads, [&](std::size_t s) {
    QuatElement x0 = scale(coeffs[s], o.basis[0]);
    for (std::size_t i1 = 0; i1 < k; ++i1) {
      QuatElement x1 = x0 + scale(coeffs[i1], o.basis[1]);
      for (std::size_t i2 = 0; i2 < k; ++i2) {
        QuatElement x2 = x1 + scale(coeffs[i2], o.basis[2]);
        for (std::size_t i3 = 0; i3 < k; ++i3) {
          QuatElement x = x2 + scale(coeffs[i3], o.basis[3]);
          if (x.norm() == 1) found[s].push_back(std::move(x));
        }
      }
    }
  });
  std::vector<QuatElement> out;
  for (auto& f : found)
    for (auto& x : f) out.push_back(std::move(x));
  return out;
}

}  // namespace torsionlab
