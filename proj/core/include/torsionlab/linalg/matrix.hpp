#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "torsionlab/errors.hpp"

namespace torsionlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix over an exact ring.
///
/// Element types that need a runtime context (residue rings, number fields)
/// construct through the explicit-fill constructor; plain GMP types can use
/// the zero-filled one.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    require(data_.size() == rows_ * cols_, "matrix entry count does not match rows x cols");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  const std::vector<T>& data() const noexcept { return data_; }
  std::vector<T>& data() noexcept { return data_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

namespace detail {
// Zero element for results built from possibly-empty operands. Context-carrying
// element types cannot be conjured from an int, so they need a nonempty operand.
template <class T>
T zero_from(const Matrix<T>& a, const Matrix<T>& b) {
  if (!a.empty()) return a(0, 0) - a(0, 0);
  if (!b.empty()) return b(0, 0) - b(0, 0);
  if constexpr (std::is_constructible_v<T, int>) {
    return T(0);
  } else {
    throw ValidationError("cannot form an empty matrix over a ring with runtime context");
  }
}
}  // namespace detail

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  if (a.empty()) return Matrix<T>(a.cols(), a.rows(), detail::zero_from(a, a));
  Matrix<T> t(a.cols(), a.rows(), a(0, 0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  require(a.cols() == b.rows(), "matrix product: inner dimensions differ");
  const T zero = detail::zero_from(a, b);
  Matrix<T> c(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == zero) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum: shapes differ");
  Matrix<T> c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] += b.data()[i];
  return c;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference: shapes differ");
  Matrix<T> c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] -= b.data()[i];
  return c;
}

template <class T>
Matrix<T> scale(const Matrix<T>& a, const T& s) {
  Matrix<T> c = a;
  for (auto& x : c.data()) x *= s;
  return c;
}

template <class T>
bool is_zero(const Matrix<T>& a) {
  for (const auto& x : a.data())
    if (!(x == 0)) return false;
  return true;
}

template <class T>
bool is_symmetric(const Matrix<T>& a) {
  if (!a.square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (!(a(i, j) == a(j, i))) return false;
  return true;
}

/// Block matrix [a | b] (same row count).
template <class T>
Matrix<T> hconcat(const Matrix<T>& a, const Matrix<T>& b) {
  require(a.rows() == b.rows(), "hconcat: row counts differ");
  Matrix<T> c(a.rows(), a.cols() + b.cols(), detail::zero_from(a, b));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

/// Block matrix [a ; b] (same column count).
template <class T>
Matrix<T> vconcat(const Matrix<T>& a, const Matrix<T>& b) {
  require(a.cols() == b.cols(), "vconcat: column counts differ");
  Matrix<T> c(a.rows() + b.rows(), a.cols(), detail::zero_from(a, b));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  return c;
}

/// Kronecker product a ⊗ b, with block (i, j) equal to a(i, j)·b.
template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
  require(!a.empty() && !b.empty(), "kronecker: empty factor");
  Matrix<T> c(a.rows() * b.rows(), a.cols() * b.cols(), a(0, 0) - a(0, 0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return c;
}

RationalMatrix to_rational(const IntMatrix& a);
/// Fails with ValidationError if some entry is not an integer.
IntMatrix to_integer(const RationalMatrix& a);

Integer determinant(const IntMatrix& a);
Rational determinant(const RationalMatrix& a);
std::size_t rank(const RationalMatrix& a);
std::size_t rank(const IntMatrix& a);
/// Exact inverse; throws ValidationError when singular.
RationalMatrix inverse(const RationalMatrix& a);
/// Basis of the right kernel over Q, one basis vector per column.
RationalMatrix kernel_basis(const RationalMatrix& a);

}  // namespace torsionlab
