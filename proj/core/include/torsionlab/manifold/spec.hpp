#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "torsionlab/io/json_io.hpp"
#include "torsionlab/linalg/matrix.hpp"
#include "torsionlab/util/words.hpp"

namespace torsionlab {

struct GroupRingTerm {
  Integer coeff;
  Word word;
};

/// Σ n_w·w in Z[Γ], kept as written (terms with equal words are not merged).
using GroupRingElement = std::vector<GroupRingTerm>;
using GroupRingMatrix = Matrix<GroupRingElement>;

/// Cellular cochain data of K̃ as a Z[Γ]-complex: boundaries[q] is the
/// coboundary C^q → C^{q+1}, a cells[q+1] × cells[q] matrix over Z[Γ].
struct TwistedComplexSpec {
  std::string name;
  std::size_t dimension = 0;
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::vector<std::size_t> cells;
  std::vector<GroupRingMatrix> boundaries;
  std::optional<Rational> known_volume;
  bool oriented = true;
  bool closed = true;
  /// Base 2×2 images for sweeps; level k uses Sym^{2k} of each.
  std::vector<IntMatrix> sweep_generators;

  /// Σ_q (−1)^q cells_q.
  long cell_euler_characteristic() const;
};

/// Parses the JSON `.tcx` format and checks shapes plus d∘d = 0 at the probe
/// characters. Errors name the offending JSON location.
TwistedComplexSpec spec_from_json(const Json& j);
TwistedComplexSpec parse_spec(const std::filesystem::path& path);
Json to_json(const TwistedComplexSpec& spec);

/// Up to three sign characters Γ → {±1} killing every relator, one sign per
/// generator, picked in a fixed pseudo-random order. The trivial character
/// is always among them.
std::vector<std::vector<int>> probe_characters(const TwistedComplexSpec& spec);

}  // namespace torsionlab
