#include "torsionlab/local/irreducible.hpp"

#include "torsionlab/local/partition.hpp"
#include "torsionlab/sympow/sym_pow.hpp"

namespace torsionlab {

namespace {

using Field = std::shared_ptr<const GaloisRingContext>;

// Row-echelon basis over F_q with pivot columns; insert() reports growth.
class EchelonSpan {
 public:
  EchelonSpan(Field ctx, std::size_t n) : ctx_(std::move(ctx)), n_(n) {}

  bool insert(std::vector<GRElem> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const GRElem c = v[pivots_[r]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) v[j] -= c * rows_[r][j];
    }
    std::size_t piv = 0;
    while (piv < n_ && v[piv] == 0) ++piv;
    if (piv == n_) return false;
    const GRElem inv = v[piv].inverse();
    for (auto& x : v) x *= inv;
    // Keep rows fully reduced so the pivot columns stay clean.
    for (auto& row : rows_) {
      const GRElem c = row[piv];
      if (c == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) row[j] -= c * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  std::size_t dim() const { return rows_.size(); }
  const std::vector<std::vector<GRElem>>& rows() const { return rows_; }

 private:
  Field ctx_;
  std::size_t n_;
  std::vector<std::vector<GRElem>> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<GRElem> apply(const Matrix<GRElem>& m, const std::vector<GRElem>& v) {
  std::vector<GRElem> out(m.rows(), v[0] - v[0]);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

// Dimension of the smallest invariant subspace containing v.
std::size_t orbit_span(const std::vector<Matrix<GRElem>>& gens, const std::vector<GRElem>& v, const Field& ctx) {
  const std::size_t n = v.size();
  EchelonSpan span(ctx, n);
  std::vector<std::vector<GRElem>> frontier{v};
  span.insert(v);
  while (!frontier.empty() && span.dim() < n) {
    std::vector<std::vector<GRElem>> next;
    for (const auto& w : frontier)
      for (const auto& g : gens) {
        auto gw = apply(g, w);
        if (span.insert(gw)) next.push_back(std::move(gw));
      }
    frontier = std::move(next);
  }
  return span.dim();
}

}  // namespace

IrreducibilityReport sym_pow_irreducibility(const Integer& q, unsigned d, unsigned long exhaustive_limit) {
  LocalParams lp = LocalParams::from_q(q, 1);
  auto ctx = GaloisRingContext::make(lp.p, 1, lp.f);
  const GRElem zero(ctx, Integer(0)), one(ctx, Integer(1));
  const std::size_t n = d + 1;

  std::vector<Matrix<GRElem>> gens;
  for (unsigned i = 0; i < lp.f; ++i) {
    std::vector<Integer> c(lp.f, Integer(0));
    c[i] = 1;
    GRElem x(ctx, c);
    Matrix<GRElem> up(2, 2, zero), low(2, 2, zero);
    up(0, 0) = up(1, 1) = low(0, 0) = low(1, 1) = one;
    up(0, 1) = x;
    low(1, 0) = x;
    gens.push_back(sym_pow(up, d));
    gens.push_back(sym_pow(low, d));
  }

  IrreducibilityReport rep;
  const Matrix<GRElem>& n_up = gens[0];
  const Matrix<GRElem>& n_low = gens[1];
  bool ok = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const GRElem eu = n_up(i, j) - (i == j ? one : zero);
      const GRElem el = n_low(i, j) - (i == j ? one : zero);
      if (j <= i && !(eu == 0)) ok = false;
      if (j >= i && !(el == 0)) ok = false;
      if (j == i + 1 && eu == 0) ok = false;
      if (i == j + 1 && el == 0) ok = false;
    }
  rep.structural = ok;

  Integer space;
  mpz_pow_ui(space.get_mpz_t(), q.get_mpz_t(), n);
  if (space <= exhaustive_limit) {
    // Every nonzero vector must generate the whole space.
    const unsigned long qq = q.get_ui();
    std::vector<GRElem> elems;
    std::vector<unsigned long> digits(lp.f, 0);
    for (unsigned long e = 0; e < qq; ++e) {
      std::vector<Integer> c(digits.begin(), digits.end());
      elems.emplace_back(ctx, c);
      std::size_t i = 0;
      while (i < lp.f && ++digits[i] == lp.p.get_ui()) digits[i++] = 0;
    }
    bool irreducible = true;
    const unsigned long total = space.get_ui();
    for (unsigned long code = 1; code < total && irreducible; ++code) {
      unsigned long c = code;
      std::vector<GRElem> v;
      for (std::size_t i = 0; i < n; ++i, c /= qq) v.push_back(elems[c % qq]);
      if (orbit_span(gens, v, ctx) < n) irreducible = false;
    }
    rep.exhaustive = irreducible;
  }
  return rep;
}

bool sym_pow_irreducible_Fq(const Integer& q, unsigned d) { return sym_pow_irreducibility(q, d, 0).structural; }

}  // namespace torsionlab
