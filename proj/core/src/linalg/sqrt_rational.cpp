#include "torsionlab/linalg/sqrt_rational.hpp"

namespace torsionlab {

Rational rational_pow(const Rational& x, long e) {
  if (e < 0) {
    require(x != 0, "negative power of zero");
    return rational_pow(Rational(1) / x, -e);
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  r.canonicalize();
  return r;
}

SqrtRational SqrtRational::from_square(const Rational& sq) {
  require(sq >= 0, "square root of a negative rational");
  SqrtRational s;
  s.sq_ = sq;
  return s;
}

SqrtRational SqrtRational::from_value(const Rational& v) {
  require(v >= 0, "negative value for a nonnegative real");
  return from_square(v * v);
}

bool SqrtRational::is_rational() const {
  return mpz_perfect_square_p(sq_.get_num_mpz_t()) && mpz_perfect_square_p(sq_.get_den_mpz_t());
}

Rational SqrtRational::value() const {
  require(is_rational(), "value is irrational");
  Rational r;
  mpz_sqrt(r.get_num_mpz_t(), sq_.get_num_mpz_t());
  mpz_sqrt(r.get_den_mpz_t(), sq_.get_den_mpz_t());
  return r;
}

Real SqrtRational::to_real() const { return boost::multiprecision::sqrt(torsionlab::to_real(sq_)); }

std::string SqrtRational::to_string(unsigned digits) const {
  if (is_rational()) return value().get_str();
  return format_real(to_real(), digits);
}

SqrtRational& SqrtRational::operator*=(const SqrtRational& o) {
  sq_ *= o.sq_;
  return *this;
}

SqrtRational& SqrtRational::operator/=(const SqrtRational& o) {
  require(o.sq_ != 0, "division by zero");
  sq_ /= o.sq_;
  return *this;
}

SqrtRational SqrtRational::pow(long e) const {
  SqrtRational s;
  s.sq_ = rational_pow(sq_, e);
  return s;
}

SqrtRational SqrtRational::inverse() const { return pow(-1); }

}  // namespace torsionlab
