#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include <gmpxx.h>

namespace torsionlab {

using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultDigits = 64;
inline constexpr unsigned kMinimumDigits = 32;

/// Sets the working precision (decimal digits) for Real values created
/// afterwards on the calling thread. Guard digits are added internally.
void set_working_digits(unsigned digits);
unsigned working_digits();

Real to_real(const mpz_class& x);
Real to_real(const mpq_class& x);
/// Natural log of a positive integer.
Real log_integer(const mpz_class& x);

/// Fixed-format decimal string with `digits` significant digits, without
/// exponent notation for moderate magnitudes.
std::string format_real(const Real& x, unsigned digits);

/// Parses "12", "-3/4", "0.25", "1e-3" exactly.
mpq_class parse_rational(const std::string& s);
/// Parses a decimal integer string; ValidationError otherwise.
mpz_class parse_integer(const std::string& s);

}  // namespace torsionlab
