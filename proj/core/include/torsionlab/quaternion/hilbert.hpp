#pragma once

#include <string>
#include <vector>

#include "torsionlab/quaternion/algebra.hpp"

namespace torsionlab {

/// A place of Q or of Q(√−d) (d ∈ {1, 2, 3, 7, 11}).
///
/// Finite places of Q(√−d) are prime ideals above a rational prime p:
/// split ones are (p, w − r) with r ≡ √−d (mod p) (for p = 2, r is the
/// residue of the 2-adic root mod 4), inert ones are (p), ramified ones
/// (p, w) for odd p | d and (2, 1 + w) / (2, w) at 2.
struct Place {
  enum class Kind { Infinite, Rational, Split, Inert, Ramified };
  Kind kind = Kind::Rational;
  Integer p;     // 0 for the infinite place
  Integer root;  // split places only
  long d = 0;

  static Place infinity() { return Place{Kind::Infinite, 0, 0, 0}; }
  static Place rational(const Integer& p) { return Place{Kind::Rational, p, 0, 0}; }

  bool dyadic() const { return p == 2; }
  std::string label() const;
  friend bool operator==(const Place&, const Place&) = default;
};

/// Parses "inf", "oo", a prime "p" (over Q), or a prime-ideal label as
/// printed by Place::label (over Q(√−d)).
Place parse_place(const std::string& s, long d);

/// All places of F above the rational prime p.
std::vector<Place> places_above(const Integer& p, long d);

/// (a, b)_v ∈ {+1, −1}: whether z² = ax² + by² has a nontrivial solution in F_v.
/// Over Q(√−d) a single dyadic place is obtained from the product formula;
/// an UndeterminedSymbol error is raised if that is impossible.
int hilbert_symbol(const QuadElem& a, const QuadElem& b, const Place& v);

/// Hilbert symbol over Q.
int hilbert_symbol_q(const Rational& a, const Rational& b, const Place& v);

/// Places where (a, b)_v = −1, in a canonical order (∞ first, then by p).
std::vector<Place> ramification_set(const QuaternionAlgebra& alg);
bool is_division(const QuaternionAlgebra& alg);

/// The rational primes at which (a, b)_v could be nontrivial: 2, primes
/// dividing the norms of a and b, and primes dividing d.
std::vector<Integer> relevant_primes(const QuadElem& a, const QuadElem& b, long d);

}  // namespace torsionlab
