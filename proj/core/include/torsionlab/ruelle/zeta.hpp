#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torsionlab/homology/complex.hpp"
#include "torsionlab/io/json_io.hpp"
#include "torsionlab/linalg/numeric.hpp"
#include "torsionlab/linalg/sqrt_rational.hpp"

namespace torsionlab {

struct Complex {
  Real re = 0;
  Real im = 0;

  Complex() = default;
  Complex(Real r, Real i = 0) : re(std::move(r)), im(std::move(i)) {}

  Real abs() const;
  Complex conj() const { return {re, -im}; }
  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b);
};

/// A primitive closed geodesic: its length and the eigenvalues of ρ(γ).
struct GeodesicDatum {
  Real length;
  std::vector<Complex> eigenvalues;
};

/// Lengths are decimal strings or {"log": x} for ln x. Eigenvalues are
/// {"re", "im"} decimal strings or {"exp_length": r} for e^{r·ℓ}.
/// Input: {"geodesics": [{"length": …, "eigenvalues": [...]}, ...]}.
std::vector<GeodesicDatum> geodesics_from_json(const Json& j);

struct ProductReport {
  Complex value;
  /// Least real s with every |λ e^{−sℓ}| < 1 (strictly above it), from the data.
  std::optional<Real> abscissa;
  std::vector<std::string> warnings;
};

/// Π_γ Π_λ (1 − λ e^{−sℓ(γ)})^{−1}, multiplied in order of length, then
/// eigenvalue (re, im). A vanishing factor raises PoleError.
ProductReport truncated_product(const Complex& s, std::vector<GeodesicDatum> data);

/// Σ_{q=1}^{3} (−1)^q q·rk H^q for nontrivial ρ, 2·rk H¹ − 4 for trivial ρ.
/// `ranks` lists rk H^0 … rk H^3.
long order_at_zero(const std::vector<std::size_t>& ranks, bool rho_trivial);

/// R^{−1}·Π_q |H^q_tors|^{(−1)^q} over q = 0 … 3.
SqrtRational leading_coefficient(const std::vector<Integer>& torsion_orders, const SqrtRational& regulator);
SqrtRational leading_coefficient(const CohomologyReport& report, const SqrtRational& regulator);

}  // namespace torsionlab
