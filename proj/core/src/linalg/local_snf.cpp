#include "torsionlab/linalg/local_snf.hpp"

#include <algorithm>

namespace torsionlab {

unsigned valuation(const Integer& x, const Integer& p, unsigned cap) {
  if (x == 0) return cap;
  Integer y = x;
  unsigned v = 0;
  while (v < cap && mpz_divisible_p(y.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

IntMatrix reduce_mod(const IntMatrix& a, const Integer& m) {
  IntMatrix r = a;
  for (auto& x : r.data()) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw ValidationError("element is not a unit modulo " + m.get_str());
  return r;
}

std::vector<unsigned> local_smith_valuations(const IntMatrix& a, const Integer& p, unsigned t) {
  require(p >= 2 && t >= 1, "local SNF: need p >= 2 and t >= 1");
  Integer mod;
  mpz_pow_ui(mod.get_mpz_t(), p.get_mpz_t(), t);
  IntMatrix m = reduce_mod(a, mod);
  const std::size_t rows = m.rows(), cols = m.cols(), n = std::min(rows, cols);
  std::vector<unsigned> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    // Pivot of minimal valuation; ties by row then column.
    std::size_t bi = k, bj = k;
    unsigned best = t;
    for (std::size_t i = k; i < rows && best > 0; ++i)
      for (std::size_t j = k; j < cols; ++j) {
        if (m(i, j) == 0) continue;
        unsigned v = valuation(m(i, j), p, t);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    if (best == t) {
      out.resize(n, t);
      break;
    }
    m.swap_rows(k, bi);
    m.swap_cols(k, bj);
    // pivot = p^best · u with u a unit; every entry in the block is divisible by p^best.
    Integer pb;
    mpz_pow_ui(pb.get_mpz_t(), p.get_mpz_t(), best);
    Integer unit = m(k, k) / pb;
    Integer uinv = inverse_mod(unit, mod);
    for (std::size_t i = k + 1; i < rows; ++i) {
      if (m(i, k) == 0) continue;
      Integer f = (m(i, k) / pb) * uinv;
      mpz_fdiv_r(f.get_mpz_t(), f.get_mpz_t(), mod.get_mpz_t());
      for (std::size_t j = k; j < cols; ++j) {
        m(i, j) -= f * m(k, j);
        mpz_fdiv_r(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), mod.get_mpz_t());
      }
    }
    // Column clearing does not affect the remaining block once the pivot
    // column below k is zero, so it is skipped.
    out.push_back(best);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<unsigned> local_cokernel_valuations(const IntMatrix& a, const Integer& p, unsigned t) {
  auto v = local_smith_valuations(a, p, t);
  v.resize(a.rows(), t);
  return v;
}

unsigned local_kernel_exponent(const IntMatrix& a, const Integer& p, unsigned t) {
  auto v = local_smith_valuations(a, p, t);
  v.resize(a.cols(), t);
  unsigned e = 0;
  for (unsigned x : v) e += x;
  return e;
}

}  // namespace torsionlab
