#pragma once

// Local solvability of z² = a x² + b y² over Q_p by search modulo p^k.
//
// Any primitive solution has (x, y) not both divisible by p, and scaling by a
// unit only multiplies a x² + b y² by a unit square, so it is enough to look
// at (1, y) for all y and at (x, 1) for p | x. The value is then tested for
// being a square in Z_p from its residue, which needs v(n) ≤ k − 3 at p = 2
// and v(n) ≤ k − 1 otherwise. A value ≡ 0 mod p^k is taken as isotropic,
// which is sound once k exceeds v(a) + v(b) + 3.

#include <gmpxx.h>

namespace oracle {

inline bool padic_square(const mpz_class& n, const mpz_class& p, unsigned k) {
  mpz_class u = n;
  unsigned v = 0;
  while (u % p == 0) {
    u /= p;
    ++v;
  }
  if (v % 2 != 0) return false;
  if (p == 2) {
    (void)k;
    mpz_class r = u % 8;
    if (r < 0) r += 8;
    return r == 1;
  }
  mpz_class r = u % p;
  if (r < 0) r += p;
  for (mpz_class s = 1; s < p; ++s)
    if ((s * s - r) % p == 0) return true;
  return false;
}

/// +1 or −1 for integers a, b ≠ 0 at the prime p, searching modulo p^k.
inline int hilbert_by_search(mpz_class a, mpz_class b, const mpz_class& p, unsigned k) {
  // Square factors p² change nothing and would only eat into the precision.
  const mpz_class p2 = p * p;
  while (a % p2 == 0) a /= p2;
  while (b % p2 == 0) b /= p2;
  mpz_class mod;
  mpz_pow_ui(mod.get_mpz_t(), p.get_mpz_t(), k);
  const unsigned margin = (p == 2) ? 3 : 1;
  auto check = [&](const mpz_class& x, const mpz_class& y) {
    mpz_class n = a * x * x + b * y * y;
    mpz_class r = n % mod;
    if (r == 0) return true;
    mpz_class t = n;
    unsigned v = 0;
    while (t % p == 0) {
      t /= p;
      ++v;
    }
    if (v + margin > k) return false;
    return padic_square(n, p, k);
  };
  for (mpz_class y = 0; y < mod; ++y)
    if (check(1, y)) return 1;
  for (mpz_class x = 0; x < mod; x += p)
    if (check(x, 1)) return 1;
  return -1;
}

}  // namespace oracle
