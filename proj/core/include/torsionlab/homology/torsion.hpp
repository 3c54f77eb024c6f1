#pragma once

#include <vector>

#include "torsionlab/homology/complex.hpp"
#include "torsionlab/linalg/sqrt_rational.hpp"

namespace torsionlab {

/// Volume data on cohomology: for each degree q, the Gram matrix (in the
/// harmonic inner product) of the basis defining μ_q. When `lattice_basis`
/// is set the bases are Z-bases of H^q_free and every R(μ_q) is 1.
struct VolumeData {
  std::vector<RationalMatrix> gram;
  bool lattice_basis = false;
};

VolumeData volume_from_json(const Json& j);
Json to_json(const VolumeData& v);

/// Symmetric with all leading principal minors positive.
bool is_positive_definite(const RationalMatrix& g);

/// Z-bases of H^q_free realized by harmonic cocycles (columns), i.e. the
/// projections of integral cocycles orthogonal to im d_{q−1} inside ker d_q.
std::vector<RationalMatrix> harmonic_lattice_bases(const IntCochainComplex& c, const InnerProducts& inner = {});

/// Gram matrices of harmonic_lattice_bases, flagged as lattice bases.
VolumeData lattice_volume_data(const IntCochainComplex& c, const InnerProducts& inner = {});

/// τ from the combinatorial Laplacians:
///   τ² = Π_j det G_j^{(−1)^{j+1}} · Π_j det′Δ_j^{(−1)^{j+1} j}.
SqrtRational rt_laplacian(const IntCochainComplex& c, const VolumeData& vol, const InnerProducts& inner = {});

/// τ from cohomology: Π_j R(μ_j)^{(−1)^j} · Π_j |H^j_tors|^{(−1)^{j+1}}, where
/// R(μ_j) is the covolume of H^j_free measured by μ_j.
SqrtRational rt_arithmetic(const IntCochainComplex& c, const VolumeData& vol, const InnerProducts& inner = {});

struct TorsionIdentityReport {
  SqrtRational lhs;
  SqrtRational rhs;
  bool equal = false;
};

TorsionIdentityReport check_torsion_identity(const IntCochainComplex& c, const VolumeData& vol,
                                             const InnerProducts& inner = {});

/// R(M) = Π_p R_p^{(−1)^p} with R_p = √|det G_p|.
SqrtRational regulator(const VolumeData& vol);

}  // namespace torsionlab
