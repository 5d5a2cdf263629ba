#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "adorn/presentation.hpp"

namespace adorn {

// Right action of generators on the cosets of a subgroup. Coset 0 is the
// subgroup itself. Entries are indexed by Letter::column(); -1 marks an
// undefined entry.
class CosetTable {
 public:
  using Coset = std::int32_t;
  static constexpr Coset kUndefined = -1;

  CosetTable() = default;
  CosetTable(std::size_t n_generators, std::size_t n_cosets, std::vector<Coset> action);

  std::size_t n_generators() const { return n_generators_; }
  std::size_t n_cosets() const { return n_cosets_; }
  std::size_t n_columns() const { return 2 * n_generators_; }
  bool complete() const { return complete_; }

  Coset act(Coset c, Letter l) const { return action_[c * n_columns() + l.column()]; }
  // Coset reached from c along w, or kUndefined if the path leaves the table.
  Coset trace(Coset c, const Word& w) const;

  const std::vector<Coset>& action() const { return action_; }

  // Relabels cosets in breadth-first order from coset 0, scanning columns
  // in Letter order. Complete tables only.
  CosetTable standardized() const;

  friend bool operator==(const CosetTable&, const CosetTable&) = default;

 private:
  std::size_t n_generators_ = 0;
  std::size_t n_cosets_ = 0;
  std::vector<Coset> action_;
  bool complete_ = false;
};

struct EnumerationCaps {
  std::size_t max_cosets = 20000;      // coset definitions, dead ones included
  std::size_t max_deductions = 5000000;

  void validate() const;
};

// Felsch-style enumeration of the cosets of <subgroup_generators>. The
// result is standardized. Throws CapExceeded if the enumeration does not
// close within the caps.
CosetTable todd_coxeter(const GroupPresentation& p, const std::vector<Word>& subgroup_generators,
                        const EnumerationCaps& caps = {});

// Table of the commutator subgroup, built directly from the finite
// abelianization A: cosets are the elements of A in mixed-radix order over
// the torsion coordinates, generators act by translation. Throws
// InfiniteIndex when A is infinite and CapExceeded when |A| > max_cosets.
CosetTable commutator_coset_table(const GroupPresentation& p, const EnumerationCaps& caps = {});

// Checks inverse pairing, transitivity, and that every relator and
// subgroup generator acts as required.
bool is_valid_complete_table(const CosetTable& t, const GroupPresentation& p,
                             const std::vector<Word>& subgroup_generators = {});

}  // namespace adorn
