#include "torsionlab/quaternion/algebra.hpp"

namespace torsionlab {
namespace {

QuadElem in_field(QuadElem x, long d) {
  if (d != 0 && x.d() == 0) return QuadElem(x.u(), x.v(), d);
  return x;
}

}  // namespace

QuaternionAlgebra::QuaternionAlgebra(long d_, QuadElem a_, QuadElem b_) : d(d_) {
  require(d == 0 || supported_imaginary_quadratic(d),
          "quaternion algebra: base field d must be 0 (Q) or one of 1, 2, 3, 7, 11");
  require(!(a_ == 0) && !(b_ == 0), "quaternion algebra: a and b must be nonzero");
  require(d != 0 || (a_.is_rational() && b_.is_rational()), "quaternion algebra over Q needs rational a, b");
  a = in_field(a_, d);
  b = in_field(b_, d);
}

QuatElement::QuatElement(const QuaternionAlgebra& alg_, std::array<QuadElem, 4> x_) : alg(alg_), x(std::move(x_)) {
  for (auto& c : x) {
    require(alg.d != 0 || c.is_rational(), "quaternion coordinate outside Q");
    c = in_field(c, alg.d);
  }
}

QuatElement QuatElement::one(const QuaternionAlgebra& alg) { return QuatElement(alg, {1, 0, 0, 0}); }

QuatElement QuatElement::conj() const { return QuatElement(alg, {x[0], -x[1], -x[2], -x[3]}); }

QuadElem QuatElement::norm() const {
  const QuadElem& a = alg.a;
  const QuadElem& b = alg.b;
  return x[0] * x[0] - a * x[1] * x[1] - b * x[2] * x[2] + a * b * x[3] * x[3];
}

QuadElem QuatElement::trace() const { return QuadElem(2) * x[0]; }

std::string QuatElement::to_string() const {
  return "[" + x[0].to_string() + ", " + x[1].to_string() + ", " + x[2].to_string() + ", " + x[3].to_string() + "]";
}

QuatElement operator*(const QuatElement& p, const QuatElement& q) {
  require(p.alg == q.alg, "quaternion product of elements from different algebras");
  const QuadElem& a = p.alg.a;
  const QuadElem& b = p.alg.b;
  const auto& x = p.x;
  const auto& y = q.x;
  QuadElem ab = a * b;
  return QuatElement(p.alg, {x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] - ab * x[3] * y[3],
                             x[0] * y[1] + x[1] * y[0] - b * x[2] * y[3] + b * x[3] * y[2],
                             x[0] * y[2] + x[2] * y[0] + a * x[1] * y[3] - a * x[3] * y[1],
                             x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1]});
}

QuatElement operator+(const QuatElement& p, const QuatElement& q) {
  require(p.alg == q.alg, "quaternion sum of elements from different algebras");
  return QuatElement(p.alg, {p.x[0] + q.x[0], p.x[1] + q.x[1], p.x[2] + q.x[2], p.x[3] + q.x[3]});
}

QuatElement operator-(const QuatElement& p, const QuatElement& q) {
  require(p.alg == q.alg, "quaternion difference of elements from different algebras");
  return QuatElement(p.alg, {p.x[0] - q.x[0], p.x[1] - q.x[1], p.x[2] - q.x[2], p.x[3] - q.x[3]});
}

QuatElement scale(const QuadElem& c, const QuatElement& q) {
  return QuatElement(q.alg, {c * q.x[0], c * q.x[1], c * q.x[2], c * q.x[3]});
}

SqrtExtElem operator+(const SqrtExtElem& x, const SqrtExtElem& y) { return {x.s + y.s, x.t + y.t, x.a}; }
SqrtExtElem operator-(const SqrtExtElem& x, const SqrtExtElem& y) { return {x.s - y.s, x.t - y.t, x.a}; }
SqrtExtElem operator*(const SqrtExtElem& x, const SqrtExtElem& y) {
  return {x.s * y.s + x.a * x.t * y.t, x.s * y.t + x.t * y.s, x.a};
}

std::string SqrtExtElem::to_string() const {
  if (t == 0) return s.to_string();
  return "(" + s.to_string() + ")+(" + t.to_string() + ")*sqrt(a)";
}

SplitMatrix split_embed(const QuatElement& q) {
  const QuadElem& a = q.alg.a;
  const QuadElem& b = q.alg.b;
  const auto& x = q.x;
  SplitMatrix m;
  m[0][0] = {x[0], x[1], a};
  m[0][1] = {x[2], x[3], a};
  m[1][0] = {b * x[2], -(b * x[3]), a};
  m[1][1] = {x[0], -x[1], a};
  return m;
}

SplitMatrix split_mul(const SplitMatrix& p, const SplitMatrix& q) {
  SplitMatrix r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = p[i][0] * q[0][j] + p[i][1] * q[1][j];
  return r;
}

SqrtExtElem split_det(const SplitMatrix& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
SqrtExtElem split_trace(const SplitMatrix& m) { return m[0][0] + m[1][1]; }

}  // namespace torsionlab
