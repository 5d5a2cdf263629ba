#include <doctest.h>

#include "adorn/word.hpp"

using adorn::Letter;
using adorn::Word;

namespace {
const Letter a(0, 1), A(0, -1), b(1, 1), B(1, -1);
}

TEST_CASE("letters order by column and invert") {
  CHECK(a.column() == 0);
  CHECK(A.column() == 1);
  CHECK(b.column() == 2);
  CHECK(a.inverse() == A);
  CHECK(B.inverse() == b);
  CHECK(Letter::from_column(3) == B);
  CHECK(a < A);
  CHECK(A < b);
}

TEST_CASE("power, inverse and pow") {
  CHECK(Word::power(0, 3) == Word{a, a, a});
  CHECK(Word::power(1, -2) == Word{B, B});
  CHECK(Word::power(0, 0).empty());
  CHECK((Word{a, b}).inverse() == Word{B, A});
  CHECK((Word{a, b}).pow(-2) == Word{B, A, B, A});
  CHECK((Word{a, b}).pow(0).empty());
}

TEST_CASE("free and cyclic reduction") {
  CHECK(adorn::free_reduce(Word{a, b, B, A, a}) == Word{a});
  CHECK(adorn::free_reduce(Word{a, A, b, B}).empty());
  CHECK(adorn::cyclically_reduce(Word{B, a, a, b}) == Word{a, a});
  CHECK(adorn::cyclically_reduce(Word{b, a, B}) == Word{a});
  CHECK(adorn::cyclically_reduce(Word{a, b, A, B}) == Word{a, b, A, B});
}

TEST_CASE("commutator is reduced") {
  CHECK(adorn::commutator(Word{a}, Word{b}) == Word{a, b, A, B});
  CHECK(adorn::commutator(Word{a}, Word{a}).empty());
}

TEST_CASE("statistics") {
  const Word w{a, b, a, A, B, B};
  CHECK(w.exponent_sum(0) == 1);
  CHECK(w.exponent_sum(1) == -1);
  CHECK(w.occurrences(1) == 3);
  CHECK(w.arity() == 2);
  CHECK(Word{}.arity() == 0);
  CHECK(w.rotated(2) == Word{a, A, B, B, a, b});
}

TEST_CASE("cyclic key identifies rotations and inverses") {
  const Word w{a, b, b, A, B};
  const Word key = adorn::cyclic_key(adorn::cyclically_reduce(w));
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Word r = adorn::cyclically_reduce(w.rotated(i));
    CHECK(adorn::cyclic_key(r) == key);
    CHECK(adorn::cyclic_key(adorn::cyclically_reduce(r.inverse())) == key);
  }
  CHECK(adorn::cyclic_key(Word{a, b}) != adorn::cyclic_key(Word{a, B}));
}
