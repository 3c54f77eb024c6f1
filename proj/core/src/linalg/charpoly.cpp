#include "torsionlab/linalg/charpoly.hpp"

namespace torsionlab {
namespace {

// Similarity reduction to upper Hessenberg form over Q.
RationalMatrix hessenberg(RationalMatrix h) {
  const std::size_t n = h.rows();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      h.swap_rows(i, m);
      h.swap_cols(i, m);
    }
    const Rational t = h(m, m - 1);
    for (i = m + 1; i < n; ++i) {
      if (h(i, m - 1) == 0) continue;
      Rational u = h(i, m - 1) / t;
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= u * h(m, j);
      for (std::size_t j = 0; j < n; ++j) h(j, m) += u * h(j, i);
    }
  }
  return h;
}

}  // namespace

std::vector<Rational> char_poly(const RationalMatrix& a) {
  require(a.square(), "char_poly: matrix is not square");
  const std::size_t n = a.rows();
  RationalMatrix h = hessenberg(a);
  // p[m] is the characteristic polynomial of the leading m×m block.
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Rational> cur(m + 1, Rational(0));
    for (std::size_t k = 0; k < m; ++k) {
      cur[k + 1] += p[m - 1][k];
      cur[k] -= h(m - 1, m - 1) * p[m - 1][k];
    }
    Rational t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t *= h(m - i, m - i - 1);
      if (t == 0) break;
      Rational f = t * h(m - i - 1, m - 1);
      if (f == 0) continue;
      for (std::size_t k = 0; k < p[m - i - 1].size(); ++k) cur[k] -= f * p[m - i - 1][k];
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

RationalMatrix poly_eval(const std::vector<Rational>& coeffs, const RationalMatrix& a) {
  require(a.square(), "poly_eval: matrix is not square");
  RationalMatrix acc(a.rows(), a.cols());
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = acc * a;
    for (std::size_t i = 0; i < a.rows(); ++i) acc(i, i) += coeffs[k];
  }
  return acc;
}

Rational det_prime_unchecked(const RationalMatrix& a) {
  auto c = char_poly(a);
  const std::size_t n = a.rows();
  std::size_t k = 0;
  while (k < n && c[k] == 0) ++k;
  Rational v = c[k];
  if ((n - k) % 2 == 1) v = -v;
  return v;
}

Rational det_prime(const RationalMatrix& s) {
  require(is_symmetric(s), "det_prime: matrix is not symmetric");
  return det_prime_unchecked(s);
}

}  // namespace torsionlab
