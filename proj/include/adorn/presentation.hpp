#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "adorn/word.hpp"

namespace adorn {

struct PresentationStats {
  std::size_t n_generators = 0;
  std::size_t n_relators = 0;
  std::size_t total_length = 0;

  friend bool operator==(const PresentationStats&, const PresentationStats&) = default;
};

// A finitely presented group. Relators are stored freely and cyclically
// reduced; empty relators are dropped at construction.
class GroupPresentation {
 public:
  GroupPresentation() = default;
  GroupPresentation(std::string name, std::vector<std::string> generator_names,
                    std::vector<Word> relators);

  // Generators named x0, x1, ...
  static GroupPresentation with_fresh_names(std::string name, std::size_t n_generators,
                                            std::vector<Word> relators);

  const std::string& name() const { return name_; }
  std::size_t n_generators() const { return generator_names_.size(); }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  const std::vector<Word>& relators() const { return relators_; }

  std::size_t total_length() const;
  PresentationStats stats() const;

  GroupPresentation renamed(std::string name) const;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;

 private:
  std::string name_;
  std::vector<std::string> generator_names_;
  std::vector<Word> relators_;
};

std::vector<std::string> fresh_names(std::size_t n);

// Renders a word with runs collapsed to powers, e.g. "a^2 b^-1 a".
std::string format_word(const Word& w, const std::vector<std::string>& names);

// Renders "< a, b | a^2, b^3 >"; parse_presentation(to_string(p)) == p.
std::string to_string(const GroupPresentation& p);

}  // namespace adorn
