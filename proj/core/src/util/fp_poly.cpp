#include "torsionlab/util/fp_poly.hpp"

#include "torsionlab/errors.hpp"

namespace torsionlab {

bool is_prime(const mpz_class& p) { return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 40) > 0; }

FpPoly fp_normalize(FpPoly a, const mpz_class& p) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, const mpz_class& p) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return fp_normalize(std::move(c), p);
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, const mpz_class& p) {
  FpPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return fp_normalize(std::move(c), p);
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b, const mpz_class& p) {
  require(!b.empty(), "polynomial division by zero");
  FpPoly r = fp_normalize(a, p);
  mpz_class lead_inv;
  mpz_invert(lead_inv.get_mpz_t(), b.back().get_mpz_t(), p.get_mpz_t());
  while (r.size() >= b.size()) {
    mpz_class f = r.back() * lead_inv;
    std::size_t shift = r.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
    r = fp_normalize(std::move(r), p);
  }
  return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, const mpz_class& p) {
  a = fp_normalize(std::move(a), p);
  b = fp_normalize(std::move(b), p);
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

FpPoly fp_powmod(const FpPoly& base, const mpz_class& e, const FpPoly& m, const mpz_class& p) {
  FpPoly result = fp_mod(FpPoly{1}, m, p);
  FpPoly b = fp_mod(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = fp_mod(fp_mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = fp_mod(fp_mul(result, b, p), m, p);
  }
  return result;
}

bool fp_irreducible(const FpPoly& f0, const mpz_class& p) {
  FpPoly f = fp_normalize(f0, p);
  require(f.size() >= 2, "irreducibility test needs degree >= 1");
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  if (n == 1) return true;
  const FpPoly x{0, 1};
  auto x_pow_pk = [&](unsigned k) {
    mpz_class e;
    mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), k);
    return fp_powmod(x, e, f, p);
  };
  if (!fp_sub(x_pow_pk(n), x, p).empty()) return false;
  for (unsigned r = 2; r <= n; ++r) {
    if (n % r) continue;
    bool prime = true;
    for (unsigned s = 2; s * s <= r; ++s)
      if (r % s == 0) prime = false;
    if (!prime) continue;
    FpPoly g = fp_gcd(f, fp_sub(x_pow_pk(n / r), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

FpPoly first_irreducible(unsigned degree, const mpz_class& p) {
  require(degree >= 1, "degree must be positive");
  require(p.fits_ulong_p(), "prime too large for polynomial search");
  const unsigned long pp = p.get_ui();
  std::vector<unsigned long> digits(degree, 0);
  for (;;) {
    FpPoly f(degree + 1);
    for (unsigned i = 0; i < degree; ++i) f[i] = digits[i];
    f[degree] = 1;
    if (fp_irreducible(f, p)) return f;
    unsigned i = 0;
    while (i < degree && ++digits[i] == pp) digits[i++] = 0;
    require(i < degree, "no irreducible polynomial found");
  }
}

}  // namespace torsionlab
