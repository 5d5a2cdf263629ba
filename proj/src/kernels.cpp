#include "adorn/kernels.hpp"

#include <omp.h>

namespace adorn::kernels {

namespace {

bool closes_at(const CosetTable& t, std::span<const Word> relators, CosetTable::Coset c) {
  for (const Word& r : relators)
    if (t.trace(c, r) != c) return false;
  return true;
}

}  // namespace

bool relators_close_serial(const CosetTable& t, std::span<const Word> relators) {
  for (std::size_t c = 0; c < t.n_cosets(); ++c)
    if (!closes_at(t, relators, static_cast<CosetTable::Coset>(c))) return false;
  return true;
}

bool relators_close_parallel(const CosetTable& t, std::span<const Word> relators) {
  const long n = static_cast<long>(t.n_cosets());
  bool ok = true;
#pragma omp parallel for reduction(&& : ok) schedule(static)
  for (long c = 0; c < n; ++c) ok = ok && closes_at(t, relators, static_cast<CosetTable::Coset>(c));
  return ok;
}

Word rewrite_word(const CosetTable& t, std::span<const std::int32_t> schreier_index,
                  CosetTable::Coset start, const Word& w) {
  const std::size_t gens = t.n_generators();
  std::vector<Letter> out;
  out.reserve(w.size());
  auto emit = [&out](Letter l) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  };
  CosetTable::Coset c = start;
  for (Letter l : w) {
    if (l.sign() > 0) {
      const std::int32_t s = schreier_index[c * gens + l.gen()];
      if (s >= 0) emit(Letter(static_cast<std::size_t>(s), 1));
      c = t.act(c, l);
    } else {
      const CosetTable::Coset prev = t.act(c, l);
      const std::int32_t s = schreier_index[prev * gens + l.gen()];
      if (s >= 0) emit(Letter(static_cast<std::size_t>(s), -1));
      c = prev;
    }
  }
  return Word(std::move(out));
}

std::vector<Word> rewrite_relators_serial(const CosetTable& t,
                                          std::span<const std::int32_t> schreier_index,
                                          std::span<const Word> relators) {
  std::vector<Word> out;
  out.reserve(t.n_cosets() * relators.size());
  for (std::size_t c = 0; c < t.n_cosets(); ++c)
    for (const Word& r : relators)
      out.push_back(rewrite_word(t, schreier_index, static_cast<CosetTable::Coset>(c), r));
  return out;
}

std::vector<Word> rewrite_relators_parallel(const CosetTable& t,
                                            std::span<const std::int32_t> schreier_index,
                                            std::span<const Word> relators) {
  const long n = static_cast<long>(t.n_cosets() * relators.size());
  const long nr = static_cast<long>(relators.size());
  std::vector<Word> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 16)
  for (long k = 0; k < n; ++k)
    out[k] = rewrite_word(t, schreier_index, static_cast<CosetTable::Coset>(k / nr),
                          relators[static_cast<std::size_t>(k % nr)]);
  return out;
}

}  // namespace adorn::kernels
