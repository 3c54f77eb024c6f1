#pragma once

// Sym^n(g) entry by entry from the binomial theorem: column j is
// (a x + c y)^{n−j} (b x + d y)^j and row i reads the coefficient of
// x^{n−i} y^i. No polynomial multiplication is shared with the library.

#include <vector>

namespace oracle {

inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <class R>
R power(const R& x, long e, const R& one) {
  R r = one;
  for (long i = 0; i < e; ++i) r = r * x;
  return r;
}

/// g given as a, b, c, d; returns rows of an (n+1)×(n+1) matrix.
template <class R>
std::vector<std::vector<R>> sym_pow_by_substitution(const R& a, const R& b, const R& c, const R& d, long n,
                                                     const R& zero, const R& one) {
  std::vector<std::vector<R>> m(n + 1, std::vector<R>(n + 1, zero));
  for (long j = 0; j <= n; ++j) {
    for (long i = 0; i <= n; ++i) {
      R s = zero;
      // y-degree r from the first factor, i − r from the second.
      for (long r = 0; r <= i; ++r) {
        const long u = n - j, v = j;
        if (r > u || i - r > v) continue;
        const R term = R(binomial(u, r) * binomial(v, i - r)) * power(a, u - r, one) * power(c, r, one) *
                       power(b, v - (i - r), one) * power(d, i - r, one);
        s = s + term;
      }
      m[i][j] = s;
    }
  }
  return m;
}

}  // namespace oracle
