#include "torsionlab/linalg/numeric.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>

#include "torsionlab/errors.hpp"

namespace torsionlab {
namespace {
thread_local unsigned g_digits = kDefaultDigits;
}

void set_working_digits(unsigned digits) {
  require(digits >= kMinimumDigits, "precision must be at least 32 digits");
  g_digits = digits;
  Real::default_precision(digits + 10);
}

unsigned working_digits() { return g_digits; }

Real to_real(const mpz_class& x) { return Real(x.get_mpz_t()); }

Real to_real(const mpq_class& x) { return Real(x.get_mpq_t()); }

Real log_integer(const mpz_class& x) {
  require(x > 0, "logarithm of a non-positive integer");
  return boost::multiprecision::log(to_real(x));
}

std::string format_real(const Real& x, unsigned digits) {
  if (x == 0) return "0";
  std::ostringstream os;
  Real ax = boost::multiprecision::abs(x);
  if (ax >= Real("1e-6") && ax < Real("1e30")) {
    // significant digits → digits after the point
    long e = static_cast<long>(boost::multiprecision::floor(boost::multiprecision::log10(ax)).convert_to<double>());
    long frac = static_cast<long>(digits) - 1 - e;
    if (frac < 0) frac = 0;
    os << std::fixed << std::setprecision(frac) << x;
  } else {
    os << std::scientific << std::setprecision(digits - 1) << x;
  }
  return os.str();
}

mpz_class parse_integer(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  require(i < s.size(), "malformed integer \"" + s + "\"");
  for (std::size_t k = i; k < s.size(); ++k)
    require(std::isdigit(static_cast<unsigned char>(s[k])), "malformed integer \"" + s + "\"");
  mpz_class z;
  z.set_str(s[0] == '+' ? s.substr(1) : s, 10);
  return z;
}

mpq_class parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class n = parse_integer(s.substr(0, slash));
    mpz_class d = parse_integer(s.substr(slash + 1));
    require(d != 0, "zero denominator in \"" + s + "\"");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
  }
  std::string mant = s;
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    mant = s.substr(0, epos);
    exp10 = parse_integer(s.substr(epos + 1)).get_si();
  }
  auto dot = mant.find('.');
  if (dot != std::string::npos) {
    std::string frac = mant.substr(dot + 1);
    mant = mant.substr(0, dot) + frac;
    exp10 -= static_cast<long>(frac.size());
    if (mant.empty() || mant == "-" || mant == "+") mant += "0";
  }
  mpq_class q(parse_integer(mant));
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 >= 0)
    q *= p10;
  else
    q /= p10;
  q.canonicalize();
  return q;
}

}  // namespace torsionlab
