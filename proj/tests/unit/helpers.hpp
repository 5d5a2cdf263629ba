#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

#include "adorn/parse.hpp"
#include "adorn/presentation.hpp"

namespace testing {

inline adorn::GroupPresentation P(const std::string& text) { return adorn::parse_presentation(text); }

// Word over p's generators from "a b^-1 a^2"; no free or cyclic reduction.
inline adorn::Word W(const adorn::GroupPresentation& p, const std::string& text) {
  adorn::Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    const auto caret = tok.find('^');
    const std::string name = tok.substr(0, caret);
    const long e = caret == std::string::npos ? 1 : std::stol(tok.substr(caret + 1));
    std::size_t g = 0;
    while (g < p.n_generators() && p.generator_names()[g] != name) ++g;
    if (g == p.n_generators()) throw std::invalid_argument("no generator " + name);
    w.append(adorn::Word::power(g, e));
  }
  return w;
}

}  // namespace testing
