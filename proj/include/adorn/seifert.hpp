#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "adorn/presentation.hpp"

namespace adorn {

// Base orbifold of a Seifert fibered space. Only orientable bases with cone
// points are supported.
struct SeifertData {
  std::size_t base_genus = 0;
  bool orientable_base = true;
  std::vector<long> cone_indices;
  bool has_boundary = false;

  // Throws UnsupportedOrbifold or InvalidArgument.
  void validate() const;
};

enum class SeifertBranch { FiniteDerived, Solvable, NonAdorable, Perfect, ReaderCase };

std::string to_string(SeifertBranch b);
SeifertBranch parse_seifert_branch(const std::string& s);

struct SeifertClassification {
  SeifertBranch branch;
  std::string summary;             // short reason, e.g. "homology sphere case"
  std::vector<std::string> trace;  // decisions in the order they were taken
};

// Orbifold fundamental group of the base: the fuchsian presentation when
// closed, the free product of 2g copies of Z and the cone groups otherwise.
GroupPresentation orbifold_presentation(const SeifertData& s);

SeifertClassification classify_seifert(const SeifertData& s);

}  // namespace adorn
