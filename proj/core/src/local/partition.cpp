#include "torsionlab/local/partition.hpp"

#include "torsionlab/linalg/local_snf.hpp"
#include "torsionlab/quaternion/number_theory.hpp"
#include "torsionlab/util/fp_poly.hpp"

namespace torsionlab {

LocalParams LocalParams::from_q(const Integer& q, unsigned t) {
  require(q >= 2, "q must be a prime power >= 2");
  auto fac = factorize(q);
  require(fac.size() == 1, "q = " + q.get_str() + " is not a prime power");
  require(t >= 1, "precision t must be positive");
  LocalParams lp;
  lp.p = fac[0].first;
  lp.f = fac[0].second;
  lp.q = q;
  lp.t = t;
  return lp;
}

std::size_t EigenPartition::total() const {
  std::size_t s = dim_inf;
  for (auto d : dims) s += d;
  return s;
}

EigenPartition eigen_partition(const Integer& q, const Integer& p, unsigned k) {
  LocalParams lp = LocalParams::from_q(q);
  require(lp.p == p, "q = " + q.get_str() + " is not a power of p = " + p.get_str());
  const Integer qm1 = q - 1;
  EigenPartition ep;
  ep.k = k;
  for (long t = -static_cast<long>(k); t <= static_cast<long>(k); ++t) {
    std::optional<unsigned> idx;
    if (t != 0) {
      Integer two_t = 2 * t;
      if (!mpz_divisible_p(two_t.get_mpz_t(), qm1.get_mpz_t())) {
        idx = 0;
      } else {
        Integer m = two_t / qm1;
        idx = 1 + valuation(m, p, 1u << 20);
      }
    }
    ep.index.push_back(idx);
    if (!idx) {
      ++ep.dim_inf;
    } else {
      if (ep.dims.size() <= *idx) ep.dims.resize(*idx + 1, 0);
      ++ep.dims[*idx];
    }
  }
  if (ep.dims.empty()) ep.dims.push_back(0);
  return ep;
}

unsigned gr_valuation(const GRElem& x) {
  const auto& ctx = x.context();
  require(ctx != nullptr, "valuation needs a ring context");
  unsigned v = ctx->t;
  for (const auto& c : x.coeffs()) v = std::min(v, valuation(c, ctx->p, ctx->t));
  return v;
}

namespace {

// Residue generates F_q^×: x^{(q−1)/r} ≠ 1 for each prime r | q−1.
bool is_primitive_residue(const GRElem& a, const LocalParams& lp) {
  auto ctx1 = GaloisRingContext::make(lp.p, 1, lp.f, a.context()->poly);
  GRElem r(ctx1, a.coeffs());
  if (!r.is_unit()) return false;
  const Integer qm1 = lp.q - 1;
  if (qm1 == 1) return true;
  for (const auto& [prime, e] : factorize(qm1))
    if (r.pow(qm1 / prime) == GRElem(ctx1, Integer(1))) return false;
  return true;
}

}  // namespace

GRElem admissible_root(const LocalParams& lp, unsigned prec) {
  require(prec >= 3, "admissible_root: precision must be at least 3");
  auto ctx = GaloisRingContext::make(lp.p, prec, lp.f);
  const Integer p2 = lp.p * lp.p;
  require(p2.fits_ulong_p(), "admissible_root: p too large");
  const unsigned long bound = p2.get_ui();
  std::vector<unsigned long> digits(lp.f, 0);
  const GRElem one(ctx, Integer(1));
  for (;;) {
    std::vector<Integer> c(digits.begin(), digits.end());
    GRElem a(ctx, c);
    if (is_primitive_residue(a, lp)) {
      GRElem u = a.pow(lp.q - 1) - one;  // ≡ 0 mod p
      bool ok = gr_valuation(u) == 1;
      if (ok && lp.p == 2 && lp.q >= 4) {
        // Residue of u/2 must lie outside the prime field F_2.
        bool in_prime_field = true;
        for (std::size_t i = 1; i < u.coeffs().size(); ++i)
          if (mpz_tstbit(u.coeffs()[i].get_mpz_t(), 1)) in_prime_field = false;
        ok = !in_prime_field;
      }
      if (ok) return a;
    }
    std::size_t i = 0;
    while (i < lp.f && ++digits[i] == bound) digits[i++] = 0;
    if (i == lp.f) break;
  }
  throw ComputationError("no admissible root below p^2 for q = " + lp.q.get_str());
}

std::optional<unsigned> eigen_order(const GRElem& a, long t) {
  const auto& ctx = a.context();
  GRElem x = a.pow(Integer(2 * t)) - GRElem(ctx, Integer(1));
  unsigned v = gr_valuation(x);
  if (v >= ctx->t) return std::nullopt;
  return v;
}

}  // namespace torsionlab
