#include "torsionlab/local/quotient.hpp"

#include <algorithm>

#include "torsionlab/linalg/local_snf.hpp"
#include "torsionlab/sympow/sym_pow.hpp"
#include "torsionlab/util/fp_poly.hpp"

namespace torsionlab {

namespace {

unsigned denominator_valuation(const RationalMatrix& m, const Integer& p) {
  unsigned s = 0;
  for (const auto& x : m.data()) s = std::max(s, valuation(x.get_den(), p, 1u << 20));
  return s;
}

IntMatrix reduce_p_integral(const RationalMatrix& m, const Integer& modulus) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.data().size(); ++i) {
    const Rational& x = m.data()[i];
    Integer v = x.get_num() * inverse_mod(x.get_den(), modulus);
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
    r.data()[i] = v;
  }
  return r;
}

Matrix<GRElem> two_by_two(const std::shared_ptr<const GaloisRingContext>& ctx, const GRElem& a, const GRElem& b,
                          const GRElem& c, const GRElem& d) {
  Matrix<GRElem> m(2, 2, GRElem(ctx, Integer(0)));
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

}  // namespace

QuotientReport largest_invariant_quotient(const LocalLattice& lattice, const std::vector<IntMatrix>& gens,
                                          const LocalParams& lp) {
  const IntMatrix& b = lattice.basis;
  require(b.square() && !b.empty(), "lattice basis must be a nonempty square matrix");
  require(determinant(b) != 0, "lattice basis is singular");
  const std::size_t n = b.rows();
  const Integer modulus = [&] {
    Integer m;
    mpz_pow_ui(m.get_mpz_t(), lp.p.get_mpz_t(), lp.t);
    return m;
  }();

  QuotientReport rep;
  RationalMatrix rb = to_rational(b);
  RationalMatrix binv = inverse(rb);
  rep.basis_defect = denominator_valuation(binv, lp.p);

  IntMatrix stacked(n, 0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    require(gens[i].rows() == n && gens[i].cols() == n, "generator " + std::to_string(i) + " has the wrong size");
    RationalMatrix a = binv * to_rational(gens[i]) * rb;
    if (denominator_valuation(a, lp.p) != 0)
      throw ValidationError("lattice is not stable under generator " + std::to_string(i));
    IntMatrix ai = reduce_p_integral(a, modulus);
    for (std::size_t d = 0; d < n; ++d) ai(d, d) -= 1;
    stacked = hconcat(stacked, ai);
  }

  for (unsigned v : local_cokernel_valuations(stacked, lp.p, lp.t)) {
    if (v == 0) continue;
    rep.valuations.push_back(v);
    rep.log_p_order += v;
    if (v >= lp.t) rep.exhausted = true;
  }
  std::sort(rep.valuations.begin(), rep.valuations.end());
  rep.ln_q_order = Rational(rep.log_p_order, lp.f);
  rep.ln_q_order.canonicalize();
  return rep;
}

std::vector<IntMatrix> standard_generators(const LocalParams& lp, unsigned k, unsigned prec) {
  GRElem a = admissible_root(lp, prec);
  const auto& ctx = a.context();
  const GRElem zero(ctx, Integer(0)), one(ctx, Integer(1));
  std::vector<Matrix<GRElem>> gens2;
  gens2.push_back(two_by_two(ctx, a, zero, zero, a.inverse()));
  for (unsigned i = 0; i < lp.f; ++i) {
    std::vector<Integer> c(lp.f, Integer(0));
    c[i] = 1;
    GRElem x(ctx, c);
    gens2.push_back(two_by_two(ctx, one, x, zero, one));
    gens2.push_back(two_by_two(ctx, one, zero, x, one));
  }
  std::vector<IntMatrix> out;
  for (const auto& g : gens2) out.push_back(restrict_scalars(sym_pow(g, 2 * k)));
  return out;
}

IntMatrix theta_action(const LocalParams& lp, unsigned k, unsigned prec) {
  const std::size_t n = 2 * k + 1;
  if (lp.f == 1) return IntMatrix::identity(n);
  auto ctx = GaloisRingContext::make(lp.p, prec, lp.f);
  std::vector<Integer> c(lp.f, Integer(0));
  c[1] = 1;
  Matrix<GRElem> m = Matrix<GRElem>::identity(n, GRElem(ctx, Integer(0)), GRElem(ctx, c));
  return restrict_scalars(m);
}

IntMatrix endo_projector(const Integer& gamma, unsigned j, unsigned size, const Integer& modulus) {
  require(j < size, "projector index out of range");
  require(modulus >= 0, "modulus must be nonnegative");
  auto reduce = [&](Integer& x) {
    if (modulus != 0) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  };
  std::vector<Integer> powers(size);
  powers[0] = 1;
  for (unsigned i = 1; i < size; ++i) {
    powers[i] = powers[i - 1] * gamma;
    reduce(powers[i]);
  }
  // p_j(A) = Π_{i≠j}(A − γ^i I), multiplied out factor by factor.
  IntMatrix acc = IntMatrix::identity(size);
  for (unsigned i = 0; i < size; ++i) {
    if (i == j) continue;
    IntMatrix factor(size, size);
    for (unsigned d = 0; d < size; ++d) {
      factor(d, d) = powers[d] - powers[i];
      reduce(factor(d, d));
    }
    acc = acc * factor;
    for (auto& x : acc.data()) reduce(x);
  }
  return acc;
}

InvariantsOrder h1_invariant_bound(const std::vector<IntMatrix>& gens, std::size_t n, const Integer& p, unsigned t) {
  require(is_prime(p), "p = " + p.get_str() + " is not prime");
  require(t >= 1, "precision t must be positive");
  IntMatrix stacked(0, n);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    require(gens[i].rows() == n && gens[i].cols() == n, "generator " + std::to_string(i) + " has the wrong size");
    IntMatrix a = gens[i];
    for (std::size_t d = 0; d < n; ++d) a(d, d) -= 1;
    stacked = vconcat(stacked, a);
  }
  InvariantsOrder r;
  r.log_p = local_kernel_exponent(stacked, p, t);
  mpz_pow_ui(r.order.get_mpz_t(), p.get_mpz_t(), r.log_p);
  return r;
}

}  // namespace torsionlab
