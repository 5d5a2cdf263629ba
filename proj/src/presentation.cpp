#include "adorn/presentation.hpp"

#include <set>

#include "adorn/errors.hpp"

namespace adorn {

GroupPresentation::GroupPresentation(std::string name,
                                     std::vector<std::string> generator_names,
                                     std::vector<Word> relators)
    : name_(std::move(name)), generator_names_(std::move(generator_names)) {
  std::set<std::string> seen;
  for (const auto& g : generator_names_) {
    if (g.empty()) throw InvalidArgument("empty generator name");
    if (!seen.insert(g).second) throw InvalidArgument("duplicate generator name '" + g + "'");
  }
  relators_.reserve(relators.size());
  for (auto& r : relators) {
    if (r.arity() > generator_names_.size())
      throw InvalidArgument("relator uses a generator index out of range");
    Word reduced = cyclically_reduce(r);
    if (!reduced.empty()) relators_.push_back(std::move(reduced));
  }
}

GroupPresentation GroupPresentation::with_fresh_names(std::string name,
                                                      std::size_t n_generators,
                                                      std::vector<Word> relators) {
  return GroupPresentation(std::move(name), fresh_names(n_generators), std::move(relators));
}

std::size_t GroupPresentation::total_length() const {
  std::size_t n = 0;
  for (const auto& r : relators_) n += r.size();
  return n;
}

PresentationStats GroupPresentation::stats() const {
  return {n_generators(), relators_.size(), total_length()};
}

GroupPresentation GroupPresentation::renamed(std::string name) const {
  GroupPresentation p = *this;
  p.name_ = std::move(name);
  return p;
}

std::vector<std::string> fresh_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long run = static_cast<long>(j - i) * w[i].sign();
    if (!out.empty()) out += ' ';
    out += names.at(w[i].gen());
    if (run != 1) out += '^' + std::to_string(run);
    i = j;
  }
  return out;
}

std::string to_string(const GroupPresentation& p) {
  std::string out = "<";
  const auto& names = p.generator_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    out += (i == 0 ? " " : ", ");
    out += names[i];
  }
  out += " |";
  const auto& rels = p.relators();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    out += (i == 0 ? " " : ", ");
    out += format_word(rels[i], names);
  }
  out += " >";
  return out;
}

}  // namespace adorn
