#pragma once

#include <memory>
#include <string>

#include "torsionlab/io/json_io.hpp"
#include "torsionlab/sympow/rings.hpp"

namespace torsionlab {

enum class RingKind { Integers, Rationals, Galois, QuadraticIntegers, GaussianRationals };

/// Coefficient ring of a matrix file, from its "ring" tag:
///   {"kind":"Z"} | {"kind":"Q"} | {"kind":"Fp","p":5} | {"kind":"Fq","p":2,"f":2[,"poly":[...]]}
///   | {"kind":"Zpt","p":3,"t":4} | {"kind":"GR","p":..,"t":..,"f":..[,"poly":[...]]}
///   | {"kind":"OF","d":7} | {"kind":"QI"}
struct RingDescriptor {
  RingKind kind = RingKind::Integers;
  std::shared_ptr<const GaloisRingContext> galois;  // Galois kinds only
  long d = 0;                                       // OF: d; QI: 1

  std::string name() const;
};

RingDescriptor ring_from_json(const Json& j);
Json to_json(const RingDescriptor& r);

QuadElem quad_from_json(const Json& j, long d);
GRElem galois_from_json(const Json& j, const std::shared_ptr<const GaloisRingContext>& ctx);
Json to_json(const QuadElem& x);
Json to_json(const GRElem& x);

Matrix<QuadElem> quad_matrix_from_json(const Json& j, long d);
Matrix<GRElem> galois_matrix_from_json(const Json& j, const std::shared_ptr<const GaloisRingContext>& ctx);
Json to_json(const Matrix<QuadElem>& m);
Json to_json(const Matrix<GRElem>& m);

/// Reads a 2×2 matrix over `ring` and returns Sym^n of it as a matrix JSON
/// object carrying the same ring tag.
Json sym_pow_json(const RingDescriptor& ring, const Json& matrix, unsigned n);

}  // namespace torsionlab
