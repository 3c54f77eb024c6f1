#include "torsionlab/linalg/matrix.hpp"

#include <algorithm>

namespace torsionlab {

RationalMatrix to_rational(const IntMatrix& a) {
  RationalMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) r.data()[i] = Rational(a.data()[i]);
  return r;
}

IntMatrix to_integer(const RationalMatrix& a) {
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    const Rational& x = a.data()[i];
    require(x.get_den() == 1, "matrix entry is not an integer");
    r.data()[i] = x.get_num();
  }
  return r;
}

// Fraction-free Bareiss elimination.
Integer determinant(const IntMatrix& a) {
  require(a.square(), "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    }
    prev = m(k, k);
  }
  Integer d = m(n - 1, n - 1);
  return sign < 0 ? Integer(-d) : d;
}

namespace {

// Row echelon form over Q in place; returns pivot columns.
std::vector<std::size_t> echelonize(RationalMatrix& m, int* swaps = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      m.swap_rows(p, r);
      if (swaps) ++*swaps;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational determinant(const RationalMatrix& a) {
  require(a.square(), "determinant of a non-square matrix");
  RationalMatrix m = a;
  int swaps = 0;
  auto pivots = echelonize(m, &swaps);
  if (pivots.size() < m.rows()) return 0;
  Rational d = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) d *= m(i, i);
  return swaps % 2 ? Rational(-d) : d;
}

std::size_t rank(const RationalMatrix& a) {
  RationalMatrix m = a;
  return echelonize(m).size();
}

std::size_t rank(const IntMatrix& a) { return rank(to_rational(a)); }

RationalMatrix inverse(const RationalMatrix& a) {
  require(a.square(), "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix aug = hconcat(a, RationalMatrix::identity(n));
  auto pivots = echelonize(aug);
  if (pivots.size() < n || (n > 0 && pivots.back() >= n)) throw ValidationError("matrix is singular");
  for (std::size_t r = n; r-- > 0;) {
    Rational inv = 1 / aug(r, r);
    for (std::size_t j = 0; j < aug.cols(); ++j) aug(r, j) *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (aug(i, r) == 0) continue;
      Rational f = aug(i, r);
      for (std::size_t j = 0; j < aug.cols(); ++j) aug(i, j) -= f * aug(r, j);
    }
  }
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

RationalMatrix kernel_basis(const RationalMatrix& a) {
  RationalMatrix m = a;
  auto pivots = echelonize(m);
  // Reduced row echelon form.
  for (std::size_t r = pivots.size(); r-- > 0;) {
    const std::size_t c = pivots[r];
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RationalMatrix k(m.cols(), free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k(free_cols[f], f) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) k(pivots[r], f) = -m(r, free_cols[f]);
  }
  return k;
}

}  // namespace torsionlab
