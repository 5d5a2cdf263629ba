#pragma once

#include <cstdint>
#include <vector>

#include "adorn/cosets.hpp"
#include "adorn/presentation.hpp"
#include "adorn/tietze.hpp"

namespace adorn {

// Breadth-first, shortest-lexicographic coset representatives; entry c
// represents coset c and entry 0 is the empty word. Prefix closed.
// Throws IncompleteTable.
std::vector<Word> schreier_transversal(const CosetTable& t);

// Schreier generators of the subgroup behind a complete table: one per
// edge c --g--> c.g that is not a transversal tree edge, numbered in
// (coset, generator) order.
class SchreierSystem {
 public:
  explicit SchreierSystem(const CosetTable& t);

  const CosetTable& table() const { return table_; }
  const std::vector<Word>& transversal() const { return transversal_; }
  std::size_t n_schreier_generators() const { return words_.size(); }
  // -1 for tree edges.
  const std::vector<std::int32_t>& index() const { return index_; }
  // Schreier generator k as a word in the parent group: t_c g t_{c.g}^-1.
  const std::vector<Word>& generator_words() const { return words_; }

  // Rewrites a word lying in the subgroup into Schreier generators.
  Word rewrite(const Word& w) const;

 private:
  CosetTable table_;
  std::vector<Word> transversal_;
  std::vector<std::int32_t> index_;
  std::vector<Word> words_;
};

struct RewriteResult {
  GroupPresentation presentation;  // simplified, generators x0, x1, ...
  PresentationStats unsimplified;  // before Tietze simplification
  bool partially_simplified = false;
};

// Presentation of the subgroup H whose cosets `t` enumerates: every
// relator conjugated by every transversal element, rewritten into
// Schreier generators, then Tietze-simplified under `caps`.
RewriteResult reidemeister_schreier(const GroupPresentation& p, const CosetTable& t,
                                    const SimplificationCaps& caps = {});

// The unsimplified Reidemeister-Schreier presentation.
GroupPresentation reidemeister_schreier_raw(const GroupPresentation& p, const SchreierSystem& s);

}  // namespace adorn
