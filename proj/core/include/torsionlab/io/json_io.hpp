#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "torsionlab/linalg/matrix.hpp"

namespace torsionlab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatTag = "tl-1";

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);
/// Two-space indented dump with a trailing newline.
std::string dump_json(const Json& j);

/// Accepts a decimal string or a JSON integer.
Integer integer_from_json(const Json& j);
/// Accepts "p/q", a decimal string, or a JSON integer.
Rational rational_from_json(const Json& j);

/// {"rows":m,"cols":n,"entries":[["-12",...],...]}
IntMatrix int_matrix_from_json(const Json& j);
RationalMatrix rational_matrix_from_json(const Json& j);
Json to_json(const IntMatrix& m);
Json to_json(const RationalMatrix& m);

/// Fetches a required member, with a validation error naming it otherwise.
const Json& member(const Json& j, const char* key);

}  // namespace torsionlab
