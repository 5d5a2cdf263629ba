#pragma once

#include <cstddef>

#include "adorn/presentation.hpp"

namespace adorn {

struct SimplificationCaps {
  std::size_t max_generators = 64;
  std::size_t max_total_relator_length = 65536;
  std::size_t max_passes = 32;

  void validate() const;
};

struct SimplifyResult {
  GroupPresentation presentation;
  // True when a cap stopped simplification early. The presentation is
  // still isomorphic to the input.
  bool partially_simplified = false;
};

// Deterministic Tietze simplification. Each pass runs, in order:
//   1. delete trivial relators
//   2. delete relators duplicating another up to rotation and inversion
//   3. eliminate generators occurring exactly once in some relator
//   4. substitute common subwords of length >= 3 when it shortens a relator
// Passes repeat until nothing changes or max_passes is reached. A
// substitution that would push the total relator length over the cap is
// skipped and the result flagged.
SimplifyResult tietze_simplify(const GroupPresentation& p, const SimplificationCaps& caps = {});

}  // namespace adorn
