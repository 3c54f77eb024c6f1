#pragma once

#include <memory>
#include <string>
#include <vector>

#include "torsionlab/linalg/matrix.hpp"

namespace torsionlab {

/// Element u + v·w of Q(√−d), w² = −d.
///
/// d = 0 marks a plain rational that has not met a field yet; it adopts the
/// d of the first field element it is combined with. This keeps integer
/// literals usable as zeros and ones in generic matrix code.
class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(long n) : u_(n) {}  // NOLINT(google-explicit-constructor)
  QuadElem(const Rational& u) : u_(u) {}  // NOLINT(google-explicit-constructor)
  QuadElem(Rational u, Rational v, long d);

  const Rational& u() const noexcept { return u_; }
  const Rational& v() const noexcept { return v_; }
  long d() const noexcept { return d_; }

  QuadElem conj() const;
  Rational norm() const;   // u² + d·v²
  Rational trace() const;  // 2u
  bool is_rational() const { return v_ == 0; }
  /// Integral over Z, i.e. lies in the ring of integers O_F.
  bool is_integral() const;

  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o);
  QuadElem operator-() const;

  friend QuadElem operator+(QuadElem a, const QuadElem& b) { return a += b; }
  friend QuadElem operator-(QuadElem a, const QuadElem& b) { return a -= b; }
  friend QuadElem operator*(QuadElem a, const QuadElem& b) { return a *= b; }
  friend QuadElem operator/(QuadElem a, const QuadElem& b) { return a /= b; }
  friend bool operator==(const QuadElem& a, const QuadElem& b) { return a.u_ == b.u_ && a.v_ == b.v_; }
  friend bool operator==(const QuadElem& a, long n) { return a.v_ == 0 && a.u_ == n; }

  /// "u", "v*w" or "u+v*w" with rationals written as p/q.
  std::string to_string() const;
  /// Inverse of to_string; also accepts "w", "-w", "2*w", spaces ignored.
  static QuadElem parse(const std::string& s, long d);

 private:
  void adopt(const QuadElem& o);

  Rational u_ = 0;
  Rational v_ = 0;
  long d_ = 0;
};

/// Squarefree positive d for which O_F is a Euclidean domain.
bool supported_imaginary_quadratic(long d);
/// Generator ω of O_F = Z[ω]: w for d ≡ 1, 2 (mod 4), (1+w)/2 for d ≡ 3 (mod 4).
QuadElem integral_generator(long d);
/// Coordinates (c0, c1) with x = c0 + c1·ω.
std::pair<Rational, Rational> integral_coordinates(const QuadElem& x);

/// Matrix of x ↦ αx on O_F in the basis (1, ω).
RationalMatrix multiplication_matrix(const QuadElem& alpha);

/// Replaces each entry by its 2×2 multiplication block in the basis (1, ω):
/// an F-linear map on F^n becomes a Q-linear map on Q^{2n} preserving O_F^n ≅ Z^{2n}.
RationalMatrix restrict_scalars(const Matrix<QuadElem>& a);

/// Galois ring GR(p^t, f) = (Z/p^t)[x]/(P) with P monic of degree f and
/// irreducible mod p. Covers F_p (t=f=1), F_q (t=1) and Z/p^t (f=1).
struct GaloisRingContext {
  Integer p;
  unsigned t = 1;
  unsigned f = 1;
  Integer modulus;            // p^t
  std::vector<Integer> poly;  // ascending, length f+1, monic

  static std::shared_ptr<const GaloisRingContext> make(const Integer& p, unsigned t, unsigned f,
                                                       std::vector<Integer> poly = {});
};

class GRElem {
 public:
  GRElem() = default;
  GRElem(long n) : c_{Integer(n)} {}  // NOLINT(google-explicit-constructor)
  GRElem(std::shared_ptr<const GaloisRingContext> ctx, std::vector<Integer> coeffs);
  GRElem(std::shared_ptr<const GaloisRingContext> ctx, const Integer& n);

  const std::shared_ptr<const GaloisRingContext>& context() const { return ctx_; }
  /// Coefficients in the power basis 1, x, …, x^{f−1}; for a context-free
  /// constant a single unreduced integer.
  const std::vector<Integer>& coeffs() const { return c_; }

  bool is_unit() const;
  GRElem inverse() const;
  GRElem pow(const Integer& e) const;
  /// Residue mod p is zero.
  bool in_maximal_ideal() const;

  GRElem& operator+=(const GRElem& o);
  GRElem& operator-=(const GRElem& o);
  GRElem& operator*=(const GRElem& o);
  GRElem operator-() const;

  friend GRElem operator+(GRElem a, const GRElem& b) { return a += b; }
  friend GRElem operator-(GRElem a, const GRElem& b) { return a -= b; }
  friend GRElem operator*(GRElem a, const GRElem& b) { return a *= b; }
  friend bool operator==(const GRElem& a, const GRElem& b);
  friend bool operator==(const GRElem& a, long n) { return a == GRElem(n); }

  std::string to_string() const;

 private:
  void adopt(const GRElem& o);
  void reduce();

  std::shared_ptr<const GaloisRingContext> ctx_;
  std::vector<Integer> c_{Integer(0)};
};

/// Matrix of y ↦ x·y on GR(p^t,f) ≅ (Z/p^t)^f in the power basis, entries in [0, p^t).
IntMatrix multiplication_matrix(const GRElem& x);

/// Replaces each entry by its f×f multiplication block (integer entries mod p^t).
IntMatrix restrict_scalars(const Matrix<GRElem>& a);

}  // namespace torsionlab
