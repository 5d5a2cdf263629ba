#include "adorn/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace adorn {

Word Word::power(std::size_t gen, long exponent) {
  Word w;
  const Letter l(gen, exponent < 0 ? -1 : 1);
  for (long i = 0; i < std::labs(exponent); ++i) w.push_back(l);
  return w;
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(it->inverse());
  return Word(std::move(out));
}

Word Word::pow(long exponent) const {
  const Word base = exponent < 0 ? inverse() : *this;
  Word out;
  for (long i = 0; i < std::labs(exponent); ++i) out.append(base);
  return out;
}

Word Word::rotated(std::size_t start) const {
  if (letters_.empty()) return *this;
  std::vector<Letter> out(letters_.size());
  std::rotate_copy(letters_.begin(),
                   letters_.begin() + static_cast<long>(start % letters_.size()),
                   letters_.end(), out.begin());
  return Word(std::move(out));
}

std::size_t Word::arity() const {
  std::size_t n = 0;
  for (Letter l : letters_) n = std::max(n, l.gen() + 1);
  return n;
}

long Word::exponent_sum(std::size_t gen) const {
  long s = 0;
  for (Letter l : letters_)
    if (l.gen() == gen) s += l.sign();
  return s;
}

std::size_t Word::occurrences(std::size_t gen) const {
  return static_cast<std::size_t>(std::count_if(
      letters_.begin(), letters_.end(), [gen](Letter l) { return l.gen() == gen; }));
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == l.inverse())
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(std::move(stack));
}

Word cyclically_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  if (lo == 0) return r;
  auto span = r.letters();
  return Word(std::vector<Letter>(span.begin() + static_cast<long>(lo),
                                  span.begin() + static_cast<long>(hi)));
}

Word commutator(const Word& u, const Word& v) {
  return free_reduce(u * v * u.inverse() * v.inverse());
}

Word cyclic_key(const Word& w) {
  if (w.empty()) return w;
  Word best = w;
  const Word inv = w.inverse();
  for (std::size_t i = 0; i < w.size(); ++i) {
    Word a = w.rotated(i);
    if (a < best) best = std::move(a);
    Word b = inv.rotated(i);
    if (b < best) best = std::move(b);
  }
  return best;
}

}  // namespace adorn
