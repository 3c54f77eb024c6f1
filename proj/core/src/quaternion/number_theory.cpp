#include "torsionlab/quaternion/number_theory.hpp"

#include <algorithm>
#include <map>

#include "torsionlab/errors.hpp"
#include "torsionlab/util/fp_poly.hpp"

namespace torsionlab {
namespace {

mpz_class pollard_brent(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    auto f = [&](const mpz_class& v) {
      mpz_class r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      mpz_class diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n0) {
  require(n0 != 0, "cannot factor zero");
  mpz_class n = abs(n0);
  std::map<mpz_class, unsigned> out;
  for (unsigned long p = 2; p < 10000 && n > 1; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[mpz_class(p)];
      n /= p;
    }
    if (mpz_class(p) * p > n) break;
  }
  if (n > 1) factor_into(n, out);
  return {out.begin(), out.end()};
}

int legendre(const mpz_class& a, const mpz_class& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

mpz_class sqrt_mod_prime(const mpz_class& a0, const mpz_class& p) {
  mpz_class a;
  mpz_mod(a.get_mpz_t(), a0.get_mpz_t(), p.get_mpz_t());
  require(legendre(a, p) == 1, "not a nonzero square modulo p");
  // Tonelli–Shanks.
  mpz_class q = p - 1;
  unsigned s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  mpz_class z = 2;
  while (legendre(z, p) != -1) ++z;
  mpz_class m = s, c, t, r, e;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  e = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  unsigned mm = s;
  while (t != 1) {
    unsigned i = 0;
    mpz_class tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    mpz_class b = c;
    for (unsigned k = 0; k + 1 + i < mm; ++k) b = b * b % p;
    mm = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

mpz_class hensel_sqrt(const mpz_class& c, const mpz_class& r0, const mpz_class& p, unsigned k) {
  mpz_class mod = p, r = r0;
  for (unsigned j = 1; j < k; ++j) {
    mod *= p;
    // r ← r − (r² − c)/(2r) mod p^{j+1}
    mpz_class inv, two_r = 2 * r, num = r * r - c;
    mpz_invert(inv.get_mpz_t(), two_r.get_mpz_t(), mod.get_mpz_t());
    r = r - num * inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  }
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  return r;
}

mpz_class sqrt_2adic(const mpz_class& c, unsigned k) {
  mpz_class c8;
  mpz_fdiv_r_ui(c8.get_mpz_t(), c.get_mpz_t(), 8);
  require(c8 == 1, "2-adic square root needs c = 1 mod 8");
  // s² ≡ c (mod 2^j) determines s modulo 2^{j−1}.
  mpz_class s = 1;
  for (unsigned j = 3; j < k + 1; ++j) {
    mpz_class mod_next;
    mpz_ui_pow_ui(mod_next.get_mpz_t(), 2, j + 1);
    mpz_class diff = s * s - c;
    if (!mpz_divisible_p(diff.get_mpz_t(), mod_next.get_mpz_t())) {
      mpz_class step;
      mpz_ui_pow_ui(step.get_mpz_t(), 2, j - 1);
      s += step;
    }
  }
  mpz_class mod;
  mpz_ui_pow_ui(mod.get_mpz_t(), 2, k);
  mpz_mod(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
  if (s % 4 != 1) s = mod - s;
  return s;
}

}  // namespace torsionlab
