#pragma once

#include <vector>

#include <gmpxx.h>

namespace torsionlab {

/// Dense polynomial over Z/p, ascending coefficients, no trailing zeros.
using FpPoly = std::vector<mpz_class>;

FpPoly fp_normalize(FpPoly a, const mpz_class& p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, const mpz_class& p);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b, const mpz_class& p);
/// Remainder of a modulo b (b nonzero).
FpPoly fp_mod(const FpPoly& a, const FpPoly& b, const mpz_class& p);
FpPoly fp_gcd(FpPoly a, FpPoly b, const mpz_class& p);
/// base^e mod m.
FpPoly fp_powmod(const FpPoly& base, const mpz_class& e, const FpPoly& m, const mpz_class& p);

/// Rabin's irreducibility test for a polynomial of degree ≥ 1 over F_p.
bool fp_irreducible(const FpPoly& f, const mpz_class& p);

/// The lexicographically first monic irreducible polynomial of degree f
/// (compared from the constant term up).
FpPoly first_irreducible(unsigned degree, const mpz_class& p);

bool is_prime(const mpz_class& p);

}  // namespace torsionlab
