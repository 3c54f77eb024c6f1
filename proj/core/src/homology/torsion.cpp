#include "torsionlab/homology/torsion.hpp"

#include "torsionlab/linalg/charpoly.hpp"
#include "torsionlab/linalg/smith.hpp"

namespace torsionlab {

VolumeData volume_from_json(const Json& j) {
  VolumeData v;
  for (const auto& g : member(j, "gram")) v.gram.push_back(rational_matrix_from_json(g));
  v.lattice_basis = j.value("lattice_basis", false);
  return v;
}

Json to_json(const VolumeData& v) {
  Json g = Json::array();
  for (const auto& m : v.gram) g.push_back(to_json(m));
  return Json{{"gram", std::move(g)}, {"lattice_basis", v.lattice_basis}};
}

bool is_positive_definite(const RationalMatrix& g) {
  if (!is_symmetric(g)) return false;
  RationalMatrix m = g;
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return true;
}

namespace {

RationalMatrix inner_or_identity(const IntCochainComplex& c, const InnerProducts& inner, std::size_t q) {
  if (inner.empty()) return RationalMatrix::identity(c.ranks[q]);
  require(inner.size() == c.degrees(), "need one inner product per degree");
  require(inner[q].rows() == c.ranks[q] && is_positive_definite(inner[q]),
          "inner product on C^" + std::to_string(q) + " is not positive definite of the right size");
  return inner[q];
}

RationalMatrix columns(const IntMatrix& a, std::size_t from, std::size_t to) {
  RationalMatrix r(a.rows(), to - from);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = from; j < to; ++j) r(i, j - from) = a(i, j);
  return r;
}

void check_volume(const IntCochainComplex& c, const VolumeData& vol, const CohomologyReport& h) {
  require(vol.gram.size() == c.degrees(), "volume data: need one Gram matrix per degree");
  for (std::size_t q = 0; q < c.degrees(); ++q) {
    const auto& g = vol.gram[q];
    require(g.rows() == h.degrees[q].free_rank && g.cols() == g.rows(),
            "volume data: Gram matrix in degree " + std::to_string(q) + " must be " +
                std::to_string(h.degrees[q].free_rank) + "x" + std::to_string(h.degrees[q].free_rank));
    require(is_positive_definite(g), "volume data: Gram matrix in degree " + std::to_string(q) +
                                         " is singular or not positive definite");
  }
}

}  // namespace

std::vector<RationalMatrix> harmonic_lattice_bases(const IntCochainComplex& c, const InnerProducts& inner) {
  c.validate();
  std::vector<RationalMatrix> out;
  for (std::size_t q = 0; q < c.degrees(); ++q) {
    const std::size_t r = c.ranks[q];
    const RationalMatrix p = inner_or_identity(c, inner, q);
    // Z-basis of cocycles.
    IntMatrix z = q < c.differentials.size() ? integer_kernel_basis(c.differentials[q]) : IntMatrix::identity(r);
    const std::size_t k = z.cols();
    // Coboundaries in cocycle coordinates: d_{q−1} = Z·X.
    IntMatrix x(k, q > 0 ? c.ranks[q - 1] : 0);
    RationalMatrix bmat(r, 0);
    if (q > 0 && k > 0) {
      RationalMatrix zr = to_rational(z);
      // Z has full column rank, so X = (ZᵀZ)^{-1} Zᵀ d exactly.
      RationalMatrix zt = transpose(zr);
      x = to_integer(inverse(zt * zr) * zt * to_rational(c.differentials[q - 1]));
      bmat = to_rational(c.differentials[q - 1]);
    }
    if (k > 0) {
      SmithForm s = smith_normal_form(x);
      // Columns s..k of Z·U^{-1} span a complement of the saturation of im X.
      IntMatrix uinv = to_integer(inverse(to_rational(s.U)));
      IntMatrix zu = z * uinv;
      RationalMatrix free = columns(zu, s.rank(), k);
      out.push_back(free);
    } else {
      out.push_back(RationalMatrix(r, 0));
    }
    RationalMatrix& h = out.back();
    if (h.cols() == 0 || q == 0 || c.ranks[q - 1] == 0) continue;
    // Project away from im d_{q−1} with respect to p.
    std::vector<std::size_t> keep;
    {
      // Independent columns of bmat.
      RationalMatrix acc(r, 0);
      for (std::size_t j = 0; j < bmat.cols(); ++j) {
        RationalMatrix col(r, 1);
        for (std::size_t i = 0; i < r; ++i) col(i, 0) = bmat(i, j);
        RationalMatrix trial = hconcat(acc, col);
        if (rank(trial) > acc.cols()) {
          acc = std::move(trial);
          keep.push_back(j);
        }
      }
      bmat = std::move(acc);
    }
    if (bmat.cols() == 0) continue;
    RationalMatrix bt = transpose(bmat);
    RationalMatrix proj = bmat * inverse(bt * p * bmat) * bt * p;
    h = h - proj * h;
  }
  return out;
}

VolumeData lattice_volume_data(const IntCochainComplex& c, const InnerProducts& inner) {
  auto bases = harmonic_lattice_bases(c, inner);
  VolumeData v;
  v.lattice_basis = true;
  for (std::size_t q = 0; q < bases.size(); ++q) {
    const RationalMatrix p = inner_or_identity(c, inner, q);
    v.gram.push_back(transpose(bases[q]) * p * bases[q]);
  }
  return v;
}

SqrtRational rt_laplacian(const IntCochainComplex& c, const VolumeData& vol, const InnerProducts& inner) {
  CohomologyReport h = cohomology(c);
  check_volume(c, vol, h);
  Rational sq = 1;
  for (std::size_t j = 0; j < c.degrees(); ++j) {
    Rational g = determinant(vol.gram[j]);
    sq *= (j % 2 == 1) ? g : 1 / g;
    if (j == 0) continue;
    RationalMatrix lap = combinatorial_laplacian(c, j, inner);
    Rational dp = inner.empty() ? det_prime(lap) : det_prime_unchecked(lap);
    long e = (j % 2 == 1) ? static_cast<long>(j) : -static_cast<long>(j);
    sq *= rational_pow(dp, e);
  }
  return SqrtRational::from_square(sq);
}

SqrtRational rt_arithmetic(const IntCochainComplex& c, const VolumeData& vol, const InnerProducts& inner) {
  CohomologyReport h = cohomology(c);
  check_volume(c, vol, h);
  Rational sq = 1;
  std::vector<RationalMatrix> lattice_gram;
  if (!vol.lattice_basis) lattice_gram = lattice_volume_data(c, inner).gram;
  for (std::size_t j = 0; j < c.degrees(); ++j) {
    if (!vol.lattice_basis) {
      // R(μ_j)² = det G_lattice / det G_supplied.
      Rational r2 = determinant(lattice_gram[j]) / determinant(vol.gram[j]);
      sq *= (j % 2 == 0) ? r2 : 1 / r2;
    }
    Rational t2 = Rational(h.degrees[j].torsion_order * h.degrees[j].torsion_order);
    sq *= (j % 2 == 1) ? t2 : 1 / t2;
  }
  return SqrtRational::from_square(sq);
}

TorsionIdentityReport check_torsion_identity(const IntCochainComplex& c, const VolumeData& vol,
                                             const InnerProducts& inner) {
  TorsionIdentityReport r;
  r.lhs = rt_laplacian(c, vol, inner);
  r.rhs = rt_arithmetic(c, vol, inner);
  r.equal = r.lhs == r.rhs;
  return r;
}

SqrtRational regulator(const VolumeData& vol) {
  Rational sq = 1;
  for (std::size_t p = 0; p < vol.gram.size(); ++p) {
    require(vol.gram[p].square(), "regulator: Gram matrix in degree " + std::to_string(p) + " is not square");
    Rational d = abs(determinant(vol.gram[p]));
    require(d != 0, "regulator: Gram matrix in degree " + std::to_string(p) + " is singular");
    sq *= (p % 2 == 0) ? d : 1 / d;
  }
  return SqrtRational::from_square(sq);
}

}  // namespace torsionlab
