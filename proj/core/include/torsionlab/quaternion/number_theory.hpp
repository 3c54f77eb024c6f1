#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

namespace torsionlab {

/// Prime factorization of |n| (n ≠ 0), primes ascending with multiplicity.
std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n);

/// Legendre symbol (a|p) for an odd prime p, in {−1, 0, 1}.
int legendre(const mpz_class& a, const mpz_class& p);

/// A square root of a modulo an odd prime p (a a nonzero square mod p).
mpz_class sqrt_mod_prime(const mpz_class& a, const mpz_class& p);

/// A root of x² ≡ c (mod p^k) lifted from a simple root r mod p (p odd).
mpz_class hensel_sqrt(const mpz_class& c, const mpz_class& r, const mpz_class& p, unsigned k);

/// A 2-adic square root s of c ≡ 1 (mod 8) with s ≡ 1 (mod 4), modulo 2^k.
mpz_class sqrt_2adic(const mpz_class& c, unsigned k);

}  // namespace torsionlab
