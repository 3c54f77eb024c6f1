#include "torsionlab/sympow/sym_pow.hpp"

namespace torsionlab {

IntMatrix sym_pow_checked(const IntMatrix& g, unsigned n) {
  require(g.rows() == 2 && g.cols() == 2, "sym_pow: need a 2x2 matrix");
  Integer d = det2(g);
  require(d == 1 || d == -1, "sym_pow: matrix is not invertible over Z (det " + d.get_str() + ")");
  return sym_pow(g, n);
}

RationalMatrix sym_pow_checked(const RationalMatrix& g, unsigned n) {
  require(g.rows() == 2 && g.cols() == 2, "sym_pow: need a 2x2 matrix");
  require(det2(g) != 0, "sym_pow: matrix is singular");
  return sym_pow(g, n);
}

Matrix<GRElem> sym_pow_checked(const Matrix<GRElem>& g, unsigned n) {
  require(g.rows() == 2 && g.cols() == 2, "sym_pow: need a 2x2 matrix");
  GRElem d = det2(g);
  require(d.context() != nullptr && d.is_unit(), "sym_pow: determinant is not a unit");
  return sym_pow(g, n);
}

Matrix<QuadElem> sym_pow_checked(const Matrix<QuadElem>& g, unsigned n, bool integral) {
  require(g.rows() == 2 && g.cols() == 2, "sym_pow: need a 2x2 matrix");
  QuadElem d = det2(g);
  require(!(d == 0), "sym_pow: matrix is singular");
  if (integral) {
    for (const auto& x : g.data()) require(x.is_integral(), "sym_pow: entry " + x.to_string() + " is not in O_F");
    require(d.norm() == 1, "sym_pow: determinant " + d.to_string() + " is not a unit of O_F");
  }
  return sym_pow(g, n);
}

Matrix<QuadElem> conjugate(const Matrix<QuadElem>& a) {
  Matrix<QuadElem> c = a;
  for (auto& x : c.data()) x = x.conj();
  return c;
}

RationalMatrix realify(const Matrix<QuadElem>& a) {
  RationalMatrix r(2 * a.rows(), 2 * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const QuadElem& z = a(i, j);
      r(2 * i, 2 * j) = z.u();
      r(2 * i, 2 * j + 1) = -z.v();
      r(2 * i + 1, 2 * j) = z.v();
      r(2 * i + 1, 2 * j + 1) = z.u();
    }
  return r;
}

RationalMatrix rho_mn(const Matrix<QuadElem>& g, unsigned m, unsigned n) {
  return realify(kronecker(sym_pow(g, m), conjugate(sym_pow(g, n))));
}

QuadElem determinant(const Matrix<QuadElem>& a) {
  require(a.square(), "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<QuadElem> m = a;
  QuadElem det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return QuadElem(0);
    if (p != k) {
      m.swap_rows(p, k);
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      QuadElem f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

}  // namespace torsionlab
