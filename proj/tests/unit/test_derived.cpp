#include <doctest.h>

#include <filesystem>

#include "adorn/cache.hpp"
#include "adorn/derived.hpp"
#include "adorn/errors.hpp"
#include "adorn/zoo.hpp"
#include "helpers.hpp"
#include "models.hpp"

using testing::P;
using testing::W;

namespace {

std::vector<std::string> stage_texts(const adorn::SeriesResult& r) {
  std::vector<std::string> out;
  for (const auto& s : r.stages) out.push_back(adorn::to_string(s.invariants));
  return out;
}

std::string oracle_text(const std::vector<std::uint64_t>& inv) {
  if (inv.empty()) return "trivial";
  std::string s;
  for (auto d : inv) s += (s.empty() ? "" : " ⊕ ") + ("Z/" + std::to_string(d));
  return s;
}

// Engine stages must match the permutation oracle stage by stage.
void check_against_oracle(const adorn::GroupPresentation& p, const oracle::Model& m) {
  REQUIRE(oracle::satisfies(m, p));
  const auto order = adorn::todd_coxeter(p, {}).n_cosets();
  REQUIRE(oracle::closure(m.gens, m.degree).size() == order);  // faithful
  const auto expected = oracle::derived_series(m.gens, m.degree);
  const auto got = adorn::derived_series(p);
  const auto* a = std::get_if<adorn::AdorableCertified>(&got.verdict);
  REQUIRE(a);
  CHECK(a->doa == expected.size() - 1);
  REQUIRE(got.stages.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(adorn::to_string(got.stages[i].invariants) == oracle_text(expected[i].quotient));
    if (i > 0) CHECK(*got.stages[i].index_in_previous * expected[i].order == expected[i - 1].order);
  }
}

}  // namespace

TEST_CASE("D-infinity") {
  const auto r = adorn::derived_series(P("< a, b | a^2, b^2 >"));
  CHECK(stage_texts(r) == std::vector<std::string>{"Z/2 ⊕ Z/2", "Z"});
  REQUIRE(std::holds_alternative<adorn::AdorableCertified>(r.verdict));
  CHECK(std::get<adorn::AdorableCertified>(r.verdict).doa == 2);
  CHECK(r.stages[1].certified_free_rank == 1u);
  CHECK(r.stages[1].index_in_previous == 4u);
}

TEST_CASE("SL(2,Z) has a free commutator subgroup of rank 2") {
  const auto r = adorn::derived_series(adorn::make("sl2z"));
  REQUIRE(r.stages.size() == 2);
  CHECK(adorn::to_string(r.stages[0].invariants) == "Z/12");
  CHECK(r.stages[1].certified_free_rank == 2u);
  const auto* n = std::get_if<adorn::NonAdorableCertified>(&r.verdict);
  REQUIRE(n);
  const auto* f = std::get_if<adorn::FreeRankAtLeast2>(&n->reason);
  REQUIRE(f);
  CHECK(f->stage == 1);
  CHECK(f->rank == 2);
}

TEST_CASE("PSL(2,Z) model") {
  const auto r = adorn::derived_series(P("< a, b | a^2, b^3 >"));
  CHECK(adorn::kind_name(r.verdict) == "NonAdorableCertified");
  CHECK(adorn::detail(r.verdict) == "FreeRankAtLeast2(stage=1, rank=2)");
}

TEST_CASE("trefoil halts on infinite abelianization") {
  const auto r = adorn::derived_series(adorn::make("trefoil"));
  const auto* h = std::get_if<adorn::HaltedInfiniteAbelianization>(&r.verdict);
  REQUIRE(h);
  CHECK(h->depth == 0);
  CHECK(h->rank == 1);
}

TEST_CASE("doa of basic groups") {
  CHECK(adorn::doa(P("< | >")) == 0u);
  CHECK(adorn::doa(P("< a | >")) == 1u);
  CHECK(adorn::doa(P("< a | a^5 >")) == 1u);
  CHECK(adorn::doa(adorn::make("triangle", {2, 3, 5})) == 0u);
  CHECK(adorn::doa(P("< a, b | a^2, b^5, (a b)^4, (a b^-1 a b)^3 >")) == 1u);
  CHECK(adorn::doa(P("< a, b | a^2, b^2, (a b)^3 >")) == 2u);
  CHECK(adorn::doa(P("< a, b | a^4, a^2 b^-2, b a b^-1 a >")) == 2u);
  CHECK_FALSE(adorn::doa(adorn::make("free", {2})).has_value());
}

TEST_CASE("stages match the permutation-group oracle") {
  SUBCASE("S3") {
    const auto p = P("< a, b | a^2, b^2, (a b)^3 >");
    check_against_oracle(p, {{{1, 0, 2}, {0, 2, 1}}, 3});
  }
  SUBCASE("Q8") { check_against_oracle(P("< a, b | a^4, a^2 b^-2, b a b^-1 a >"), oracle::quaternion_model()); }
  SUBCASE("S4") {
    const auto p = P("< a, b | a^2, b^3, (a b)^4 >");
    const auto m = oracle::search_model(p, 4, 24);
    REQUIRE(m);
    check_against_oracle(p, *m);
  }
  SUBCASE("S5") {
    const auto p = P("< a, b | a^2, b^5, (a b)^4, (a b^-1 a b)^3 >");
    const auto m = oracle::search_model(p, 5, 120);
    REQUIRE(m);
    check_against_oracle(p, *m);
  }
  SUBCASE("binary dihedral of order 12") {
    const auto p = P("< a, b | a^6, a^3 b^-2, b a b^-1 a >");
    const auto m = oracle::search_model(p, 7, 12);
    if (m) check_against_oracle(p, *m);
  }
  SUBCASE("Z/2 x S4") {
    const auto p = adorn::direct_product(P("< c | c^2 >"), P("< a, b | a^2, b^3, (a b)^4 >"));
    const auto s4 = oracle::search_model(P("< a, b | a^2, b^3, (a b)^4 >"), 4, 24);
    REQUIRE(s4);
    const oracle::Model z2{{{1, 0}}, 2};
    check_against_oracle(p, oracle::disjoint_product(z2, *s4));
  }
}

TEST_CASE("limits produce Inconclusive") {
  adorn::SeriesLimits lim;
  lim.enumeration.max_cosets = 10;
  const auto r = adorn::derived_series(P("< a, b | a^4, b^6 >"), lim);
  const auto* i = std::get_if<adorn::Inconclusive>(&r.verdict);
  REQUIRE(i);
  CHECK(i->limits_hit == std::vector<adorn::LimitHit>{adorn::LimitHit::CosetCap});

  adorn::SeriesLimits shallow;
  shallow.max_depth = 1;
  const auto q = adorn::derived_series(P("< a, b | a^4, a^2 b^-2, b a b^-1 a >"), shallow);
  REQUIRE(std::holds_alternative<adorn::Inconclusive>(q.verdict));
  CHECK(std::get<adorn::Inconclusive>(q.verdict).limits_hit == std::vector<adorn::LimitHit>{adorn::LimitHit::MaxDepth});

  adorn::SeriesLimits bad;
  bad.max_depth = 0;
  CHECK_THROWS_AS(adorn::derived_series(P("< a | >"), bad), adorn::InvalidArgument);
}

TEST_CASE("free detection needs a fully simplified stage") {
  adorn::SeriesLimits lim;
  lim.simplification.max_generators = 1;
  const auto r = adorn::derived_series(adorn::make("sl2z"), lim);
  CHECK_FALSE(std::holds_alternative<adorn::NonAdorableCertified>(r.verdict));
  for (const auto& s : r.stages)
    if (s.partially_simplified) CHECK_FALSE(s.certified_free_rank.has_value());
}

TEST_CASE("stage depths are consecutive and stage 0 describes the input") {
  const auto p = P("< a, b | a^2, b^5, (a b)^4, (a b^-1 a b)^3 >");
  const auto r = adorn::derived_series(p);
  for (std::size_t i = 0; i < r.stages.size(); ++i) CHECK(r.stages[i].depth == i);
  CHECK(r.stages[0].stats == p.stats());
}

TEST_CASE("quotients never raise doa") {
  struct Pair {
    const char* group;
    const char* quotient;
  };
  for (const auto& c : {Pair{"< a, b | a^2, b^2 >", "< a, b | a^2, b^2, (a b)^3 >"},
                        Pair{"< a, b | a^2, b^2 >", "< a, b | a^2, b^2, (a b)^4 >"},
                        Pair{"< a, b | a^2, b^2 >", "< a, b | a^2, b^2, (a b)^2 >"},
                        Pair{"< a, b | a^4, a^2 b^-2, b a b^-1 a >", "< a, b | a^4, a^2 b^-2, b a b^-1 a, a^2 >"},
                        Pair{"< a, b | a^2, b^5, (a b)^4, (a b^-1 a b)^3 >",
                             "< a, b | a^2, b^5, (a b)^4, (a b^-1 a b)^3, a >"}}) {
    const auto g = adorn::doa(P(c.group));
    const auto q = adorn::doa(P(c.quotient));
    REQUIRE(g);
    REQUIRE(q);
    CHECK(*q <= *g);
  }
}

TEST_CASE("direct products take the maximum doa") {
  const std::vector<const char*> groups = {"< a | a^2 >", "< a, b | a^2, b^2, (a b)^3 >",
                                           "< a, b | a^4, a^2 b^-2, b a b^-1 a >", "< a, b | a^2, b^3, (a b)^5 >"};
  for (const char* x : groups)
    for (const char* y : groups) {
      const auto dx = adorn::doa(P(x)), dy = adorn::doa(P(y));
      adorn::SeriesLimits lim;
      lim.enumeration.max_cosets = 100000;
      const auto d = adorn::doa(adorn::direct_product(P(x), P(y)), lim);
      REQUIRE(d);
      CHECK(*d == std::max(*dx, *dy));
    }
}

TEST_CASE("filtration certificates") {
  SUBCASE("perfect group with empty chain") {
    CHECK(adorn::verify_filtration(adorn::make("triangle", {2, 3, 5}), {}).accepted());
  }
  SUBCASE("S3 chain through A3") {
    const auto p = P("< a, b | a^2, b^3, (a b)^2 >");
    const auto short_chain = adorn::verify_filtration(p, {{W(p, "b")}});
    CHECK(short_chain.status == adorn::CertificateStatus::TerminalNotPerfect);
    const auto full = adorn::verify_filtration(p, {{W(p, "b")}, {}});
    CHECK(full.accepted());
    CHECK(full.indices == std::vector<std::size_t>{2, 3});
  }
  SUBCASE("D-infinity chain ending in the trivial group") {
    const auto p = P("< a, b | a^2, b^2 >");
    const auto r = adorn::verify_filtration(p, {{W(p, "a b")}, {}});
    CHECK(r.accepted());
  }
  SUBCASE("non-normal subgroup") {
    const auto p = P("< a, b | a^2, b^3, (a b)^2 >");
    const auto r = adorn::verify_filtration(p, {{W(p, "a")}});
    CHECK(r.status == adorn::CertificateStatus::NormalityFails);
    CHECK(r.level == 1u);
  }
  SUBCASE("normal with non-abelian quotient") {
    const auto p = P("< a, b | a^2, b^3, (a b)^2 >");
    CHECK(adorn::verify_filtration(p, {{}}).status == adorn::CertificateStatus::QuotientNotAbelian);
  }
  SUBCASE("not contained in the previous level") {
    const auto p = P("< a, b | a^2, b^3, (a b)^2 >");
    CHECK(adorn::verify_filtration(p, {{W(p, "b")}, {W(p, "a")}}).status == adorn::CertificateStatus::NotContained);
  }
}

namespace {

struct CountingCache : adorn::StageCache {
  std::map<std::string, adorn::CachedStage> store_;
  int hits = 0;
  std::optional<adorn::CachedStage> load(const std::string& key) override {
    auto it = store_.find(key);
    if (it == store_.end()) return std::nullopt;
    ++hits;
    return it->second;
  }
  void store(const std::string& key, const adorn::CachedStage& s) override { store_.emplace(key, s); }
};

}  // namespace

TEST_CASE("stage cache is consulted and gives identical results") {
  const auto p = P("< a, b | a^2, b^5, (a b)^4, (a b^-1 a b)^3 >");
  CountingCache cache;
  const auto first = adorn::derived_series(p, {}, &cache);
  CHECK(cache.hits == 0);
  CHECK_FALSE(cache.store_.empty());
  const auto second = adorn::derived_series(p, {}, &cache);
  CHECK(cache.hits > 0);
  CHECK(stage_texts(first) == stage_texts(second));

  const auto dir = std::filesystem::temp_directory_path() / "adorn_cache_test";
  std::filesystem::remove_all(dir);
  adorn::FileStageCache files(dir);
  const auto a = adorn::derived_series(p, {}, &files);
  CHECK_FALSE(std::filesystem::is_empty(dir));
  const auto b = adorn::derived_series(p, {}, &files);
  CHECK(stage_texts(a) == stage_texts(b));
  CHECK(adorn::kind_name(a.verdict) == adorn::kind_name(b.verdict));
  std::filesystem::remove_all(dir);
}

TEST_CASE("stage keys depend on presentation and limits") {
  const auto p = P("< a, b | a^2, b^3 >");
  adorn::SeriesLimits lim;
  const auto k = adorn::stage_key(p, lim);
  CHECK(k.size() == 16);
  CHECK(k == adorn::stage_key(p, lim));
  CHECK(k != adorn::stage_key(P("< a, b | a^2, b^4 >"), lim));
  lim.enumeration.max_cosets = 7;
  CHECK(k != adorn::stage_key(p, lim));
}
