#pragma once

#include <vector>

#include "torsionlab/linalg/matrix.hpp"
#include "torsionlab/sympow/rings.hpp"

namespace torsionlab {

namespace detail {

// Product of homogeneous binary forms stored by ascending y-degree.
template <class R>
std::vector<R> form_mul(const std::vector<R>& a, const std::vector<R>& b, const R& zero) {
  std::vector<R> c(a.size() + b.size() - 1, zero);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

}  // namespace detail

/// Sym^n(g) in the basis x^n, x^{n−1}y, …, y^n, where g = [[a,b],[c,d]] acts
/// by x ↦ ax + cy, y ↦ bx + dy. Column j is the expansion of
/// (ax + cy)^{n−j}(bx + dy)^j. No invertibility check; see sym_pow_checked.
template <class R>
Matrix<R> sym_pow(const Matrix<R>& g, unsigned n) {
  require(g.rows() == 2 && g.cols() == 2, "sym_pow: need a 2x2 matrix");
  const R zero = g(0, 0) - g(0, 0);
  const R one = zero + R(1);
  const std::vector<R> lx{g(0, 0), g(1, 0)};  // image of x
  const std::vector<R> ly{g(0, 1), g(1, 1)};  // image of y
  std::vector<std::vector<R>> px{{one}}, py{{one}};
  for (unsigned k = 1; k <= n; ++k) {
    px.push_back(detail::form_mul(px.back(), lx, zero));
    py.push_back(detail::form_mul(py.back(), ly, zero));
  }
  Matrix<R> s(n + 1, n + 1, zero);
  for (unsigned j = 0; j <= n; ++j) {
    std::vector<R> col = detail::form_mul(px[n - j], py[j], zero);
    for (unsigned i = 0; i <= n; ++i) s(i, j) = col[i];
  }
  return s;
}

template <class R>
R det2(const Matrix<R>& g) {
  return g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
}

/// Sym^n over Z: g must lie in GL(2, Z).
IntMatrix sym_pow_checked(const IntMatrix& g, unsigned n);
/// Over Q: det g ≠ 0.
RationalMatrix sym_pow_checked(const RationalMatrix& g, unsigned n);
/// Over a Galois ring: det g must be a unit.
Matrix<GRElem> sym_pow_checked(const Matrix<GRElem>& g, unsigned n);
/// Over Q(√−d): det g ≠ 0; if `integral`, g must lie in GL(2, O_F).
Matrix<QuadElem> sym_pow_checked(const Matrix<QuadElem>& g, unsigned n, bool integral);

Matrix<QuadElem> conjugate(const Matrix<QuadElem>& a);

/// Entry u + iv becomes the block [[u, −v], [v, u]]. Works for any d, but
/// the name and the determinant identity refer to d = 1.
RationalMatrix realify(const Matrix<QuadElem>& a);

/// realify(Sym^m(g) ⊗ conj(Sym^n(g))), of size 2(m+1)(n+1).
RationalMatrix rho_mn(const Matrix<QuadElem>& g, unsigned m, unsigned n);

/// Determinant over a field, by Gaussian elimination.
QuadElem determinant(const Matrix<QuadElem>& a);

}  // namespace torsionlab
