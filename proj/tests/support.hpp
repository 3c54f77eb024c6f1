#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "torsionlab/homology/complex.hpp"
#include "torsionlab/linalg/matrix.hpp"
#include "torsionlab/linalg/smith.hpp"
#include "torsionlab/sympow/rings.hpp"
#include "oracles/minors.hpp"

namespace testing_support {

using namespace torsionlab;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

inline IntMatrix random_int(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (auto& x : m.data()) x = rng.uniform(-bound, bound);
  return m;
}

inline RationalMatrix random_rational(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  RationalMatrix m(rows, cols);
  for (auto& x : m.data()) {
    x = Rational(rng.uniform(-bound, bound), rng.uniform(1, bound));
    x.canonicalize();
  }
  return m;
}

/// Product of random elementary matrices, so det = ±1.
inline IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && rng.coin()) u(0, 0) = -1;
    return u;
  }
  for (int s = 0; s < steps; ++s) {
    std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    const long c = rng.uniform(-2, 2);
    for (std::size_t k = 0; k < n; ++k) u(i, k) += c * u(j, k);
    if (rng.uniform(0, 5) == 0) u.swap_rows(i, j);
  }
  return u;
}

inline QuadElem random_gaussian(Rng& rng, long bound) {
  Rational u(rng.uniform(-bound, bound), rng.uniform(1, bound));
  Rational v(rng.uniform(-bound, bound), rng.uniform(1, bound));
  u.canonicalize();
  v.canonicalize();
  return QuadElem(u, v, 1);
}

inline Matrix<QuadElem> random_gaussian_matrix(Rng& rng, std::size_t n, long bound) {
  Matrix<QuadElem> m(n, n, QuadElem(0, 0, 1));
  for (auto& x : m.data()) x = random_gaussian(rng, bound);
  return m;
}

inline oracle::Grid to_grid(const IntMatrix& m) {
  oracle::Grid g(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m(i, j);
  return g;
}

/// Random 0 → Z^{r0} → Z^{r1} → Z^{r2} → 0. A unimodular W splits Z^{r1};
/// d0 maps into the span of its first s columns and d1 factors through the
/// remaining coordinates of W⁻¹, so d1·d0 = 0 exactly.
inline IntCochainComplex random_three_term(Rng& rng, std::size_t max_rank, long bound) {
  const std::size_t r1 = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_rank)));
  const std::size_t r0 = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_rank)));
  const std::size_t r2 = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_rank)));
  const std::size_t s = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(r1)));
  const IntMatrix w = random_unimodular(rng, r1);
  IntMatrix winv = to_integer(inverse(to_rational(w)));
  IntMatrix a(s, r0);
  for (auto& x : a.data()) x = rng.uniform(-bound, bound);
  IntMatrix b(r2, r1 - s);
  for (auto& x : b.data()) x = rng.uniform(-bound, bound);
  IntMatrix d0(r1, r0);
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t j = 0; j < r0; ++j)
      for (std::size_t l = 0; l < s; ++l) d0(i, j) += w(i, l) * a(l, j);
  IntMatrix d1(r2, r1);
  for (std::size_t i = 0; i < r2; ++i)
    for (std::size_t j = 0; j < r1; ++j)
      for (std::size_t l = 0; l < r1 - s; ++l) d1(i, j) += b(i, l) * winv(s + l, j);
  return IntCochainComplex{{r0, r1, r2}, {d0, d1}};
}

}  // namespace testing_support
