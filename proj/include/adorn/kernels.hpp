#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "adorn/cosets.hpp"
#include "adorn/word.hpp"

// Data-parallel inner loops of the enumeration and rewriting pipeline. Each
// OpenMP kernel has a serial reference with identical output; tests compare
// the two and bench/ times them.
namespace adorn::kernels {

// True iff every relator traced from every coset returns to that coset.
bool relators_close_serial(const CosetTable& t, std::span<const Word> relators);
bool relators_close_parallel(const CosetTable& t, std::span<const Word> relators);

// Rewrites every relator at every coset into Schreier generators.
// `schreier_index[c * n_generators + g]` is the Schreier generator for the
// edge c --g--> c.g, or -1 for a transversal tree edge. Output entry
// c * relators.size() + r is the freely reduced rewrite of relator r at
// coset c.
std::vector<Word> rewrite_relators_serial(const CosetTable& t,
                                          std::span<const std::int32_t> schreier_index,
                                          std::span<const Word> relators);
std::vector<Word> rewrite_relators_parallel(const CosetTable& t,
                                            std::span<const std::int32_t> schreier_index,
                                            std::span<const Word> relators);

// Rewrites a single word traced from coset `start`.
Word rewrite_word(const CosetTable& t, std::span<const std::int32_t> schreier_index,
                  CosetTable::Coset start, const Word& w);

}  // namespace adorn::kernels
