#include <gtest/gtest.h>

#include "support.hpp"
#include "torsionlab/homology/torsion.hpp"
#include "torsionlab/manifold/pipeline.hpp"
#include "torsionlab/ruelle/zeta.hpp"

using namespace torsionlab;
using testing_support::Rng;

namespace {

// Π_{λ ∈ {e, 1, e^{-1}}} (1 − λ e^{−2})^{−1}, evaluated with mpmath at 60 digits.
const char* kSym2Value = "1.92544629841103284932214560197012206400327630795200468";

GeodesicDatum datum(Real length, std::vector<Complex> eig) { return {std::move(length), std::move(eig)}; }

class Ruelle : public ::testing::Test {
 protected:
  void SetUp() override { set_working_digits(64); }
};

}  // namespace

TEST_F(Ruelle, EmptyProductIsOne) {
  const auto r = truncated_product(Complex(Real(1)), {});
  EXPECT_EQ(r.value.re, 1);
  EXPECT_EQ(r.value.im, 0);
  EXPECT_FALSE(r.abscissa.has_value());
}

TEST_F(Ruelle, TrivialRepresentation) {
  const auto r = truncated_product(Complex(Real(1)), {datum(log(Real(2)), {Complex(Real(1))})});
  EXPECT_LT(abs(r.value.re - 2), Real("1e-60"));
  EXPECT_LT(abs(r.value.im), Real("1e-60"));
  ASSERT_TRUE(r.abscissa.has_value());
  EXPECT_LT(abs(*r.abscissa), Real("1e-60"));
  EXPECT_TRUE(r.warnings.empty());
}

TEST_F(Ruelle, SymmetricSquareAgainstFrozenValue) {
  const Real l = 1;
  const auto r =
      truncated_product(Complex(Real(2)), {datum(l, {Complex(exp(l)), Complex(Real(1)), Complex(exp(-l))})});
  EXPECT_LT(abs(r.value.re - Real(kSym2Value)), Real("1e-50"));
  EXPECT_LT(abs(*r.abscissa - 1), Real("1e-60"));
}

TEST_F(Ruelle, ConjugateArgument) {
  const Real l1 = log(Real(3)), l2 = Real("1.7");
  const Complex z(Real("0.3"), Real("0.4"));
  std::vector<GeodesicDatum> data{datum(l1, {z, z.conj()}), datum(l2, {Complex(Real(-1)), Complex(Real("0.5"))})};
  const Complex s(Real("1.5"), Real("0.75"));
  const auto a = truncated_product(s, data);
  const auto b = truncated_product(s.conj(), data);
  EXPECT_LT(abs(a.value.re - b.value.re), Real("1e-55"));
  EXPECT_LT(abs(a.value.im + b.value.im), Real("1e-55"));
}

TEST_F(Ruelle, OrderOfFactorsDoesNotMatter) {
  std::vector<GeodesicDatum> data{datum(Real(2), {Complex(Real("0.5"), Real(1))}), datum(Real(1), {Complex(Real(2))})};
  std::vector<GeodesicDatum> swapped{data[1], data[0]};
  const auto a = truncated_product(Complex(Real(3)), data);
  const auto b = truncated_product(Complex(Real(3)), swapped);
  EXPECT_EQ(a.value.re, b.value.re);
  EXPECT_EQ(a.value.im, b.value.im);
}

TEST_F(Ruelle, PoleAndWarnings) {
  EXPECT_THROW(truncated_product(Complex(Real(1)), {datum(log(Real(2)), {Complex(Real(2))})}), PoleError);
  const auto r = truncated_product(Complex(Real("0.5")), {datum(log(Real(2)), {Complex(Real(4))})});
  EXPECT_FALSE(r.warnings.empty());
  EXPECT_LT(abs(*r.abscissa - 2), Real("1e-60"));
}

TEST_F(Ruelle, GeodesicJson) {
  const auto data = geodesics_from_json(Json::parse(R"({"geodesics":[
      {"length":{"log":"2"},"eigenvalues":[{"re":"1","im":"0"}]},
      {"length":"1","eigenvalues":[{"exp_length":"1"},{"exp_length":"-1"}]}]})"));
  ASSERT_EQ(data.size(), 2u);
  EXPECT_LT(abs(data[0].length - log(Real(2))), Real("1e-60"));
  EXPECT_LT(abs(data[1].eigenvalues[0].re - exp(Real(1))), Real("1e-60"));
  EXPECT_THROW(geodesics_from_json(Json::parse(R"({"geodesics":[{"length":"-1","eigenvalues":[]}]})")),
               ValidationError);
}

TEST_F(Ruelle, OrderAtZero) {
  EXPECT_EQ(order_at_zero({0, 0, 0, 0}, false), 0);
  EXPECT_EQ(order_at_zero({0, 1, 1, 1}, false), -2);
  EXPECT_EQ(order_at_zero({1, 3, 3, 1}, true), 2);
  EXPECT_EQ(order_at_zero({0, 2, 0, 0}, false), -2);
  EXPECT_EQ(order_at_zero({0, 0, 0, 1}, false), -3);
  EXPECT_THROW(order_at_zero({0, 1}, false), ValidationError);
}

TEST_F(Ruelle, OrderAtZeroIgnoresSublattice) {
  // Ranks are rational invariants, so M and a finite-index M′ agree.
  const auto circle = parse_spec(std::string(TORSIONLAB_FIXTURE_DIR) + "/circle.tcx");
  const GroupRepZ rep{{IntMatrix(2, 2, std::vector<Integer>{1, 1, 0, 1})}, {}, true};
  const IntMatrix s(2, 2, std::vector<Integer>{3, 0, 0, 3});
  auto ranks = [&](const GroupRepZ& r) {
    std::vector<std::size_t> out;
    for (const auto& d : cohomology(evaluate(circle, r)).degrees) out.push_back(d.free_rank);
    while (out.size() < 4) out.push_back(0);
    return out;
  };
  EXPECT_EQ(order_at_zero(ranks(rep), false), order_at_zero(ranks(restrict_to_sublattice(rep, s)), false));
}

TEST_F(Ruelle, LeadingCoefficient) {
  EXPECT_EQ(leading_coefficient(std::vector<Integer>{1, 1, 1, 1}, SqrtRational()).value(), 1);
  EXPECT_EQ(leading_coefficient(std::vector<Integer>{1, 5, 7, 2}, SqrtRational()).value(), Rational(7, 10));
  EXPECT_EQ(leading_coefficient(std::vector<Integer>{1, 1, 1, 1}, SqrtRational::from_square(3)).square(),
            Rational(1, 3));
  EXPECT_THROW(leading_coefficient(std::vector<Integer>{1, 1, 1, 1}, SqrtRational::from_square(0)),
               ValidationError);
}

TEST_F(Ruelle, LeadingCoefficientInvertsTorsion) {
  const auto torus = parse_spec(std::string(TORSIONLAB_FIXTURE_DIR) + "/torus3.tcx");
  Rng rng(71);
  for (int rep = 0; rep < 10; ++rep) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
    const IntMatrix u = testing_support::random_unimodular(rng, n, 8);
    const GroupRepZ r{{u, u * u, scale(IntMatrix::identity(n), Integer(-1))}, {}, true};
    const auto c = evaluate(torus, r);
    const VolumeData vol{std::vector<RationalMatrix>(4, RationalMatrix(0, 0)), true};
    EXPECT_EQ(leading_coefficient(cohomology(c), SqrtRational()), rt_arithmetic(c, vol).inverse());
  }
}
