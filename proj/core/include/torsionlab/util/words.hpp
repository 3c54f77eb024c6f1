#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace torsionlab {

/// One letter g_i^e of a group word.
struct Letter {
  std::size_t gen = 0;
  long exp = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Parses whitespace-separated tokens `name` or `name^k` (k may be negative).
/// An empty string or "1" is the identity. Names are looked up in
/// `generators`; the result is freely reduced.
Word parse_word(const std::string& text, const std::vector<std::string>& generators);

/// Merges adjacent powers of the same generator and drops zero exponents.
Word free_reduce(Word w);

Word inverse_word(const Word& w);

std::string format_word(const Word& w, const std::vector<std::string>& generators);

}  // namespace torsionlab
