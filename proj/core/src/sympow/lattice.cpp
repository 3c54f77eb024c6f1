#include "torsionlab/sympow/lattice.hpp"

#include "torsionlab/linalg/smith.hpp"

namespace torsionlab {
namespace {

Integer common_denominator(const RationalMatrix& a) {
  Integer l = 1;
  for (const auto& x : a.data()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

// HNF of the row lattice of a rational matrix.
RationalMatrix rational_hnf(const RationalMatrix& rows) {
  Integer den = common_denominator(rows);
  IntMatrix scaled = to_integer(scale(rows, Rational(den)));
  IntMatrix h = hermite_normal_form(scaled);
  return scale(to_rational(h), Rational(1, den));
}

bool contains(const RationalMatrix& hnf, const std::vector<Rational>& v) {
  Integer den = common_denominator(hnf);
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  IntMatrix h = to_integer(scale(hnf, Rational(den)));
  std::vector<Integer> w;
  for (const auto& x : v) w.push_back(Rational(x * den).get_num());
  return hnf_contains(h, w);
}

}  // namespace

bool lattice_is_stable(const RationalMatrix& basis, const RationalMatrix& g) {
  RationalMatrix hnf = rational_hnf(basis);
  RationalMatrix images = basis * transpose(g);
  for (std::size_t i = 0; i < images.rows(); ++i) {
    std::vector<Rational> v(images.row(i).begin(), images.row(i).end());
    if (!contains(hnf, v)) return false;
  }
  return true;
}

namespace {

// `extra` maps are applied without their inverses (multiplication by ω).
RationalMatrix saturate_impl(const std::vector<RationalMatrix>& gens, const std::vector<RationalMatrix>& extra,
                             const SaturationOptions& opt) {
  require(!gens.empty(), "saturate: no generators");
  const std::size_t m = gens.front().rows();
  std::vector<RationalMatrix> actions;  // transposes, acting on row vectors
  for (const auto& g : gens) {
    require(g.rows() == m && g.cols() == m, "saturate: generators must be square of equal size");
    require(determinant(g) != 0, "saturate: generator is singular");
    actions.push_back(transpose(g));
    actions.push_back(transpose(inverse(g)));
  }
  for (const auto& g : extra) actions.push_back(transpose(g));
  RationalMatrix basis = RationalMatrix::identity(m);
  for (unsigned iter = 0; iter < opt.max_iter; ++iter) {
    RationalMatrix all = basis;
    for (const auto& a : actions) all = vconcat(all, basis * a);
    RationalMatrix next = rational_hnf(all);
    Integer den = common_denominator(next);
    if (mpz_sizeinbase(den.get_mpz_t(), 2) > opt.denom_bits)
      throw SaturationFailure("saturate: denominators exceed 2^" + std::to_string(opt.denom_bits) +
                              " after " + std::to_string(iter + 1) + " iterations");
    if (next == basis) {
      for (const auto& a : actions)
        if (!lattice_is_stable(basis, transpose(a)))
          throw ComputationError("saturate: closure is not stable (internal error)");
      return basis;
    }
    basis = std::move(next);
  }
  throw SaturationFailure("saturate: no stable lattice within " + std::to_string(opt.max_iter) + " iterations");
}

}  // namespace

RationalMatrix saturate_stable_lattice(const std::vector<RationalMatrix>& gens, const SaturationOptions& opt) {
  return saturate_impl(gens, {}, opt);
}

RationalMatrix saturate_stable_lattice(const std::vector<Matrix<QuadElem>>& gens, const SaturationOptions& opt) {
  require(!gens.empty(), "saturate: no generators");
  long d = 0;
  for (const auto& g : gens)
    for (const auto& x : g.data())
      if (x.d() != 0) d = x.d();
  std::vector<RationalMatrix> real;
  for (const auto& g : gens) real.push_back(restrict_scalars(g));
  std::vector<RationalMatrix> extra;
  if (d != 0) {
    const std::size_t m = gens.front().rows();
    Matrix<QuadElem> w(m, m);
    for (std::size_t i = 0; i < m; ++i) w(i, i) = integral_generator(d);
    extra.push_back(restrict_scalars(w));
  }
  return saturate_impl(real, extra, opt);
}

}  // namespace torsionlab
