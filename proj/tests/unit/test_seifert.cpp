#include <doctest.h>

#include <numeric>

#include "adorn/abelian.hpp"
#include "adorn/errors.hpp"
#include "adorn/seifert.hpp"

using adorn::SeifertBranch;

namespace {
adorn::SeifertData closed(std::size_t g, std::vector<long> cones) { return {g, true, std::move(cones), false}; }
adorn::SeifertData bounded(std::size_t g, std::vector<long> cones) { return {g, true, std::move(cones), true}; }
SeifertBranch branch(const adorn::SeifertData& s) { return adorn::classify_seifert(s).branch; }
}  // namespace

TEST_CASE("decision table") {
  CHECK(branch(closed(0, {2, 3, 5})) == SeifertBranch::FiniteDerived);
  CHECK(branch(closed(0, {2, 3, 7})) == SeifertBranch::Perfect);
  CHECK(branch(closed(0, {2, 3, 6})) == SeifertBranch::Solvable);
  CHECK(branch(closed(0, {2, 4, 4})) == SeifertBranch::Solvable);
  CHECK(branch(closed(0, {3, 3, 3})) == SeifertBranch::Solvable);
  CHECK(branch(closed(0, {3, 5, 7})) == SeifertBranch::Perfect);
  CHECK(branch(closed(0, {2, 4, 6})) == SeifertBranch::NonAdorable);
  CHECK(branch(closed(1, {})) == SeifertBranch::Solvable);
  CHECK(branch(closed(1, {2})) == SeifertBranch::NonAdorable);
  CHECK(branch(closed(2, {})) == SeifertBranch::NonAdorable);
  CHECK(branch(closed(0, {})) == SeifertBranch::FiniteDerived);
  CHECK(branch(closed(0, {5, 7})) == SeifertBranch::FiniteDerived);
  CHECK(branch(closed(0, {2, 2, 2, 2})) == SeifertBranch::Solvable);
  CHECK(branch(closed(0, {2, 2, 2, 2, 2, 2})) == SeifertBranch::NonAdorable);
  CHECK(branch(closed(0, {2, 3, 5, 7, 11, 13})) == SeifertBranch::Perfect);
  CHECK(branch(closed(0, {2, 3, 5, 7, 11})) == SeifertBranch::ReaderCase);
  CHECK(branch(closed(0, {2, 2, 3, 5, 7})) == SeifertBranch::ReaderCase);
  CHECK(branch(closed(0, {3, 6, 5, 7, 11})) == SeifertBranch::NonAdorable);
  CHECK(branch(closed(0, {3, 3, 4, 4})) == SeifertBranch::NonAdorable);
  CHECK(branch(closed(0, {2, 3, 5, 7})) == SeifertBranch::Perfect);
  CHECK(branch(bounded(0, {})) == SeifertBranch::Solvable);
  CHECK(branch(bounded(0, {5})) == SeifertBranch::Solvable);
  CHECK(branch(bounded(0, {2, 2})) == SeifertBranch::Solvable);
  CHECK(branch(bounded(0, {2, 3})) == SeifertBranch::NonAdorable);
  CHECK(branch(bounded(1, {})) == SeifertBranch::NonAdorable);
}

TEST_CASE("summaries and traces") {
  const auto c = adorn::classify_seifert(closed(0, {2, 3, 7}));
  CHECK(c.summary == "homology sphere case");
  CHECK(c.trace.size() >= 2);
  const auto r = adorn::classify_seifert(closed(0, {2, 3, 5, 7, 11}));
  CHECK(r.trace.back() == "perfectness of the orbifold group: perfect");
  CHECK(adorn::parse_seifert_branch("ReaderCase") == SeifertBranch::ReaderCase);
  CHECK_THROWS_AS(adorn::parse_seifert_branch("Other"), adorn::InvalidArgument);
}

TEST_CASE("unsupported inputs") {
  adorn::SeifertData s = closed(0, {2, 3, 7});
  s.orientable_base = false;
  CHECK_THROWS_AS(adorn::classify_seifert(s), adorn::UnsupportedOrbifold);
  CHECK_THROWS_AS(adorn::classify_seifert(closed(0, {1, 3})), adorn::InvalidArgument);
}

TEST_CASE("orbifold presentations") {
  CHECK(adorn::to_string(adorn::orbifold_presentation(closed(0, {2, 3, 7}))) ==
        "< x1, x2, x3 | x1^2, x2^3, x3^7, x1 x2 x3 >");
  CHECK(adorn::to_string(adorn::abelianization(adorn::orbifold_presentation(bounded(1, {2, 3})))) == "Z^2 ⊕ Z/6");
}

TEST_CASE("perfect branch agrees with the perfectness test") {
  std::size_t perfect = 0;
  for (long p = 2; p <= 12; ++p)
    for (long q = p; q <= 12; ++q)
      for (long r = q; r <= 12; ++r) {
        const auto s = closed(0, {p, q, r});
        const bool engine = adorn::is_perfect(adorn::orbifold_presentation(s));
        const auto b = branch(s);
        if (b == SeifertBranch::Perfect) {
          CHECK(engine);
          ++perfect;
        }
        // only spherical (2,3,5) is perfect outside the Perfect branch
        if (engine && b != SeifertBranch::Perfect) CHECK(b == SeifertBranch::FiniteDerived);
      }
  CHECK(perfect > 10);
  for (long a = 2; a <= 12; ++a)
    for (long b = a; b <= 12; ++b)
      for (long c = b; c <= 12; c += 3)
        for (long d = c; d <= 12; d += 4) {
          const auto s = closed(0, {a, b, c, d});
          if (branch(s) == SeifertBranch::Perfect) CHECK(adorn::is_perfect(adorn::orbifold_presentation(s)));
        }
}
