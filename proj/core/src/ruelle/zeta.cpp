#include "torsionlab/ruelle/zeta.hpp"

#include <algorithm>

namespace torsionlab {

Real Complex::abs() const { return sqrt(re * re + im * im); }

Complex operator/(const Complex& a, const Complex& b) {
  const Real n = b.re * b.re + b.im * b.im;
  if (n == 0) throw PoleError("division by zero");
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

namespace {

Real real_from_json(const Json& j, const char* what) {
  if (j.is_object() && j.contains("log")) {
    Rational x = rational_from_json(j["log"]);
    require(x > 0, std::string(what) + ": log argument must be positive");
    return log(to_real(x));
  }
  if (j.is_string()) return to_real(parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return to_real(Rational(integer_from_json(j)));
  throw ValidationError(std::string(what) + ": expected a decimal string or {\"log\": x}");
}

}  // namespace

std::vector<GeodesicDatum> geodesics_from_json(const Json& j) {
  std::vector<GeodesicDatum> out;
  const Json& list = member(j, "geodesics");
  require(list.is_array(), "geodesics must be an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "geodesics[" + std::to_string(i) + "]";
    GeodesicDatum d;
    d.length = real_from_json(member(list[i], "length"), (where + ".length").c_str());
    require(d.length > 0, where + ": length must be positive");
    for (const auto& e : member(list[i], "eigenvalues")) {
      if (e.contains("exp_length")) {
        Rational r = rational_from_json(e["exp_length"]);
        d.eigenvalues.emplace_back(exp(to_real(r) * d.length));
      } else {
        d.eigenvalues.emplace_back(real_from_json(member(e, "re"), "re"),
                                   e.contains("im") ? real_from_json(e["im"], "im") : Real(0));
      }
    }
    require(!d.eigenvalues.empty(), where + ": no eigenvalues");
    out.push_back(std::move(d));
  }
  return out;
}

ProductReport truncated_product(const Complex& s, std::vector<GeodesicDatum> data) {
  for (auto& d : data)
    std::sort(d.eigenvalues.begin(), d.eigenvalues.end(), [](const Complex& a, const Complex& b) {
      return a.re < b.re || (a.re == b.re && a.im < b.im);
    });
  std::stable_sort(data.begin(), data.end(), [](const GeodesicDatum& a, const GeodesicDatum& b) {
    if (a.length != b.length) return a.length < b.length;
    return std::lexicographical_compare(a.eigenvalues.begin(), a.eigenvalues.end(), b.eigenvalues.begin(),
                                        b.eigenvalues.end(), [](const Complex& x, const Complex& y) {
                                          return x.re < y.re || (x.re == y.re && x.im < y.im);
                                        });
  });

  // Factors within a few ulps of zero count as exact poles.
  const Real eps = pow(Real(10), -static_cast<int>(working_digits()));
  ProductReport rep;
  Complex prod(1);
  for (std::size_t g = 0; g < data.size(); ++g) {
    const auto& d = data[g];
    // e^{−sℓ} = e^{−ℓ·Re s}(cos(ℓ·Im s) − i sin(ℓ·Im s)).
    const Real mag = exp(-d.length * s.re);
    const Complex damp(mag * cos(d.length * s.im), -mag * sin(d.length * s.im));
    for (const auto& lambda : d.eigenvalues) {
      const Complex term = lambda * damp;
      const Real size = term.abs();
      if (size >= 1)
        rep.warnings.push_back("factor for geodesic " + std::to_string(g) + " has |λe^{-sℓ}| = " +
                               format_real(size, 12) + " >= 1 (outside the convergence region)");
      const Complex factor = Complex(1) - term;
      if (factor.abs() <= eps) throw PoleError("pole: factor 1 - λe^{-sℓ} vanishes for geodesic " + std::to_string(g));
      prod = prod * factor;
    }
  }
  rep.value = Complex(1) / prod;

  for (const auto& d : data)
    for (const auto& lambda : d.eigenvalues) {
      const Real a = lambda.abs();
      if (a == 0) continue;
      Real c = log(a) / d.length;
      if (!rep.abscissa || c > *rep.abscissa) rep.abscissa = c;
    }
  return rep;
}

long order_at_zero(const std::vector<std::size_t>& ranks, bool rho_trivial) {
  require(ranks.size() == 4, "order_at_zero needs ranks of H^0 … H^3");
  if (rho_trivial) return 2 * static_cast<long>(ranks[1]) - 4;
  long s = 0;
  for (long q = 1; q <= 3; ++q) s += (q % 2 == 0 ? 1 : -1) * q * static_cast<long>(ranks[q]);
  return s;
}

SqrtRational leading_coefficient(const std::vector<Integer>& torsion_orders, const SqrtRational& regulator) {
  require(regulator.square() != 0, "regulator must be nonzero");
  Rational t = 1;
  for (std::size_t q = 0; q < torsion_orders.size(); ++q) {
    require(torsion_orders[q] > 0, "torsion orders must be positive");
    if (q % 2 == 0)
      t *= torsion_orders[q];
    else
      t /= torsion_orders[q];
  }
  return SqrtRational::from_value(t) / regulator;
}

SqrtRational leading_coefficient(const CohomologyReport& report, const SqrtRational& regulator) {
  std::vector<Integer> orders;
  for (const auto& d : report.degrees) orders.push_back(d.torsion_order);
  return leading_coefficient(orders, regulator);
}

}  // namespace torsionlab
