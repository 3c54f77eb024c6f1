#include "torsionlab/linalg/smith.hpp"

#include <algorithm>

namespace torsionlab {
namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Quotient rounded to nearest, so |a - q·b| ≤ |b|/2.
Integer round_div(const Integer& a, const Integer& b) {
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Integer r2 = 2 * abs(r);
  if (r2 > abs(b)) q += 1;
  return q;
}

template <bool Track>
class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& a) : w_(a) {
    if constexpr (Track) {
      u_ = IntMatrix::identity(a.rows());
      v_ = IntMatrix::identity(a.cols());
    }
  }

  void run() {
    const std::size_t m = w_.rows(), n = w_.cols();
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      if (!select_pivot(t, t, t)) break;
      reduce_at(t);
      if (w_(t, t) < 0) negate_row(t);
    }
  }

  IntMatrix& w() { return w_; }
  IntMatrix& u() { return u_; }
  IntMatrix& v() { return v_; }

 private:
  // Smallest nonzero |entry| in rows ≥ r0, cols ≥ c0; moved to (t, t).
  bool select_pivot(std::size_t t, std::size_t r0, std::size_t c0) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    for (std::size_t i = r0; i < w_.rows(); ++i) {
      for (std::size_t j = c0; j < w_.cols(); ++j) {
        const Integer& x = w_(i, j);
        if (x == 0) continue;
        if (!found || cmpabs(x, w_(bi, bj)) < 0) {
          bi = i;
          bj = j;
          found = true;
        }
      }
    }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void reduce_at(std::size_t t) {
    const std::size_t m = w_.rows(), n = w_.cols();
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (w_(i, t) == 0) continue;
        Integer q = round_div(w_(i, t), w_(t, t));
        if (q != 0) add_row(i, t, -q);
        if (w_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (w_(t, j) == 0) continue;
        Integer q = round_div(w_(t, j), w_(t, t));
        if (q != 0) add_col(j, t, -q);
        if (w_(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A smaller remainder now sits in row or column t; promote it.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (w_(i, t) != 0 && cmpabs(w_(i, t), w_(bi, bj)) < 0) bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (w_(t, j) != 0 && cmpabs(w_(t, j), w_(bi, bj)) < 0) bi = t, bj = j;
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // Row and column cleared; enforce divisibility of the remaining block.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (w_(i, j) == 0) continue;
          if (!mpz_divisible_p(w_(i, j).get_mpz_t(), w_(t, t).get_mpz_t())) {
            add_row(t, i, 1);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) return;
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    w_.swap_rows(a, b);
    if constexpr (Track) u_.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    w_.swap_cols(a, b);
    if constexpr (Track) v_.swap_cols(a, b);
  }
  // row[dst] += f · row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t j = 0; j < w_.cols(); ++j)
      if (w_(src, j) != 0) w_(dst, j) += f * w_(src, j);
    if constexpr (Track)
      for (std::size_t j = 0; j < u_.cols(); ++j)
        if (u_(src, j) != 0) u_(dst, j) += f * u_(src, j);
  }
  // col[dst] += f · col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t i = 0; i < w_.rows(); ++i)
      if (w_(i, src) != 0) w_(i, dst) += f * w_(i, src);
    if constexpr (Track)
      for (std::size_t i = 0; i < v_.rows(); ++i)
        if (v_(i, src) != 0) v_(i, dst) += f * v_(i, src);
  }
  void negate_row(std::size_t t) {
    for (std::size_t j = 0; j < w_.cols(); ++j) w_(t, j) = -w_(t, j);
    if constexpr (Track)
      for (std::size_t j = 0; j < u_.cols(); ++j) u_(t, j) = -u_(t, j);
  }

  IntMatrix w_, u_, v_;
};

std::vector<Integer> diagonal_factors(const IntMatrix& s) {
  std::vector<Integer> f;
  for (std::size_t t = 0; t < std::min(s.rows(), s.cols()); ++t) {
    if (s(t, t) == 0) break;
    f.push_back(s(t, t));
  }
  return f;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithReducer<true> r(a);
  r.run();
  SmithForm out;
  out.invariant_factors = diagonal_factors(r.w());
  out.S = std::move(r.w());
  out.U = std::move(r.u());
  out.V = std::move(r.v());
  return out;
}

std::vector<Integer> smith_invariants(const IntMatrix& a) {
  SmithReducer<false> r(a);
  r.run();
  return diagonal_factors(r.w());
}

CokernelStructure cokernel_invariants(const IntMatrix& a, std::size_t ambient_rank) {
  require(a.rows() == ambient_rank, "cokernel: matrix row count differs from ambient rank");
  auto f = smith_invariants(a);
  CokernelStructure c;
  c.free_rank = ambient_rank - f.size();
  for (auto& x : f)
    if (x > 1) c.torsion_factors.push_back(x);
  return c;
}

IntMatrix integer_kernel_basis(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  const std::size_t r = s.rank();
  IntMatrix k(a.cols(), a.cols() - r);
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = r; j < a.cols(); ++j) k(i, j - r) = s.V(i, j);
  return k;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix m = a;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // gcd-combine rows r.. into a single pivot at (r, c).
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      if (m(r, c) == 0) {
        m.swap_rows(r, i);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m(r, c).get_mpz_t(), m(i, c).get_mpz_t());
      Integer ar = m(r, c) / g, ai = m(i, c) / g;
      for (std::size_t j = c; j < cols; ++j) {
        Integer x = m(r, j), y = m(i, j);
        m(r, j) = s * x + t * y;
        m(i, j) = ar * y - ai * x;
      }
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0)
      for (std::size_t j = c; j < cols; ++j) m(r, j) = -m(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= q * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  IntMatrix h(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) h(i, j) = m(i, j);
  return h;
}

std::vector<Integer> hnf_coordinates(const IntMatrix& hnf, std::span<const Integer> v, bool* ok) {
  require(v.size() == hnf.cols(), "lattice membership: vector length differs");
  std::vector<Integer> rest(v.begin(), v.end());
  std::vector<Integer> coeff(hnf.rows());
  std::size_t c = 0;
  for (std::size_t r = 0; r < hnf.rows(); ++r) {
    while (hnf(r, c) == 0) {
      if (rest[c] != 0) {
        *ok = false;
        return {};
      }
      ++c;
    }
    if (!mpz_divisible_p(rest[c].get_mpz_t(), hnf(r, c).get_mpz_t())) {
      *ok = false;
      return {};
    }
    Integer q = rest[c] / hnf(r, c);
    coeff[r] = q;
    if (q != 0)
      for (std::size_t j = c; j < hnf.cols(); ++j) rest[j] -= q * hnf(r, j);
    ++c;
  }
  for (; c < rest.size(); ++c)
    if (rest[c] != 0) {
      *ok = false;
      return {};
    }
  *ok = true;
  return coeff;
}

bool hnf_contains(const IntMatrix& hnf, std::span<const Integer> v) {
  bool ok = false;
  hnf_coordinates(hnf, v, &ok);
  return ok;
}

}  // namespace torsionlab
