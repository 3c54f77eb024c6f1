#pragma once

#include <stdexcept>
#include <string>

namespace torsionlab {

/// Malformed or inconsistent input (shape mismatch, d∘d ≠ 0, bad parameters).
/// The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A well-formed computation that could not be completed.
/// The CLI maps this to exit code 3.
class ComputationError : public std::runtime_error {
 public:
  explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

/// Iterated lattice closure exceeded its iteration or denominator budget.
class SaturationFailure : public ComputationError {
 public:
  explicit SaturationFailure(const std::string& what) : ComputationError(what) {}
};

/// A local Hilbert symbol that can be neither evaluated nor recovered
/// from the product formula.
class UndeterminedSymbol : public ComputationError {
 public:
  explicit UndeterminedSymbol(const std::string& what) : ComputationError(what) {}
};

/// A factor of a truncated Euler product vanished exactly.
class PoleError : public ComputationError {
 public:
  explicit PoleError(const std::string& what) : ComputationError(what) {}
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ValidationError(message);
}

}  // namespace torsionlab
