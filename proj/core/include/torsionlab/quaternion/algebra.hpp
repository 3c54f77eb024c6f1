#pragma once

#include <array>
#include <string>

#include "torsionlab/sympow/rings.hpp"

namespace torsionlab {

/// H(a, b; F) with i² = a, j² = b, ij = −ji = k, over F = Q (d = 0) or
/// Q(√−d) with d ∈ {1, 2, 3, 7, 11}.
struct QuaternionAlgebra {
  long d = 0;
  QuadElem a;
  QuadElem b;

  QuaternionAlgebra() = default;
  QuaternionAlgebra(long d, QuadElem a, QuadElem b);

  friend bool operator==(const QuaternionAlgebra& x, const QuaternionAlgebra& y) {
    return x.d == y.d && x.a == y.a && x.b == y.b;
  }
};

/// x0 + x1 i + x2 j + x3 k.
struct QuatElement {
  QuaternionAlgebra alg;
  std::array<QuadElem, 4> x;

  QuatElement() = default;
  QuatElement(const QuaternionAlgebra& alg, std::array<QuadElem, 4> x);
  static QuatElement one(const QuaternionAlgebra& alg);

  QuatElement conj() const;
  QuadElem norm() const;   // x0² − a x1² − b x2² + ab x3²
  QuadElem trace() const;  // 2 x0
  std::string to_string() const;

  friend QuatElement operator*(const QuatElement& p, const QuatElement& q);
  friend QuatElement operator+(const QuatElement& p, const QuatElement& q);
  friend QuatElement operator-(const QuatElement& p, const QuatElement& q);
  friend bool operator==(const QuatElement& p, const QuatElement& q) { return p.alg == q.alg && p.x == q.x; }
};

QuatElement scale(const QuadElem& c, const QuatElement& q);

/// Element s + t√a of F(√a), a ∈ F.
struct SqrtExtElem {
  QuadElem s;
  QuadElem t;
  QuadElem a;

  friend SqrtExtElem operator+(const SqrtExtElem& x, const SqrtExtElem& y);
  friend SqrtExtElem operator-(const SqrtExtElem& x, const SqrtExtElem& y);
  friend SqrtExtElem operator*(const SqrtExtElem& x, const SqrtExtElem& y);
  friend bool operator==(const SqrtExtElem& x, const SqrtExtElem& y) { return x.s == y.s && x.t == y.t; }
  std::string to_string() const;
};

using SplitMatrix = std::array<std::array<SqrtExtElem, 2>, 2>;

/// φ(x) = [[x0 + x1√a, x2 + x3√a], [b(x2 − x3√a), x0 − x1√a]], so that
/// φ(i) = diag(√a, −√a) and φ(j) = [[0, 1], [b, 0]].
SplitMatrix split_embed(const QuatElement& x);
SplitMatrix split_mul(const SplitMatrix& p, const SplitMatrix& q);
SqrtExtElem split_det(const SplitMatrix& m);
SqrtExtElem split_trace(const SplitMatrix& m);

}  // namespace torsionlab
