#pragma once

#include <vector>

#include "torsionlab/linalg/matrix.hpp"

namespace torsionlab {

/// Characteristic polynomial det(λI − A), coefficients in ascending degree
/// (index i holds the coefficient of λ^i; the last entry is 1).
std::vector<Rational> char_poly(const RationalMatrix& a);

/// Evaluates a polynomial (ascending coefficients) at a square matrix.
RationalMatrix poly_eval(const std::vector<Rational>& coeffs, const RationalMatrix& a);

/// Product of the nonzero eigenvalues of a symmetric matrix, read off the
/// lowest nonzero coefficient of the characteristic polynomial. 1 for the
/// zero matrix and for the empty matrix.
Rational det_prime(const RationalMatrix& s);

/// Same as det_prime but without the symmetry requirement. Valid whenever A
/// is diagonalizable (e.g. self-adjoint for some inner product), where it
/// still equals the product of nonzero eigenvalues.
Rational det_prime_unchecked(const RationalMatrix& a);

}  // namespace torsionlab
