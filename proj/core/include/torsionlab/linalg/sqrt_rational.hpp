#pragma once

#include <string>

#include "torsionlab/linalg/matrix.hpp"
#include "torsionlab/linalg/numeric.hpp"

namespace torsionlab {

/// A nonnegative real of the form √r with r rational, stored through its
/// square. Closed under products, quotients and integer powers, which is all
/// the torsion formulas need.
class SqrtRational {
 public:
  SqrtRational() : sq_(1) {}
  static SqrtRational from_square(const Rational& sq);
  static SqrtRational from_value(const Rational& v);  // v ≥ 0

  const Rational& square() const noexcept { return sq_; }
  /// True when the value itself is rational.
  bool is_rational() const;
  /// The value, valid only when is_rational().
  Rational value() const;
  Real to_real() const;
  /// Exact value when rational ("p/q" or "n"), otherwise a decimal string.
  std::string to_string(unsigned digits) const;

  SqrtRational& operator*=(const SqrtRational& o);
  SqrtRational& operator/=(const SqrtRational& o);
  SqrtRational pow(long e) const;
  SqrtRational inverse() const;

  friend SqrtRational operator*(SqrtRational a, const SqrtRational& b) { return a *= b; }
  friend SqrtRational operator/(SqrtRational a, const SqrtRational& b) { return a /= b; }
  friend bool operator==(const SqrtRational& a, const SqrtRational& b) { return a.sq_ == b.sq_; }

 private:
  Rational sq_;
};

/// Exact integer power of a rational (negative exponents allowed).
Rational rational_pow(const Rational& x, long e);

}  // namespace torsionlab
