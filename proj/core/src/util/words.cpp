#include "torsionlab/util/words.hpp"

#include <algorithm>
#include <sstream>

#include "torsionlab/errors.hpp"

namespace torsionlab {

Word parse_word(const std::string& text, const std::vector<std::string>& generators) {
  std::istringstream in(text);
  std::string tok;
  Word w;
  while (in >> tok) {
    if (tok == "1") continue;
    std::string name = tok;
    long e = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string es = tok.substr(caret + 1);
      std::size_t used = 0;
      try {
        e = std::stol(es, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      require(used == es.size() && !es.empty(), "bad exponent in word token \"" + tok + "\"");
    }
    auto it = std::find(generators.begin(), generators.end(), name);
    require(it != generators.end(), "unknown generator \"" + name + "\" in word \"" + text + "\"");
    w.push_back({static_cast<std::size_t>(it - generators.begin()), e});
  }
  return free_reduce(std::move(w));
}

Word free_reduce(Word w) {
  Word out;
  for (const Letter& l : w) {
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().gen == l.gen) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& l : r) l.exp = -l.exp;
  return r;
}

std::string format_word(const Word& w, const std::vector<std::string>& generators) {
  if (w.empty()) return "1";
  std::string s;
  for (const Letter& l : w) {
    if (!s.empty()) s += ' ';
    s += generators.at(l.gen);
    if (l.exp != 1) s += "^" + std::to_string(l.exp);
  }
  return s;
}

}  // namespace torsionlab
