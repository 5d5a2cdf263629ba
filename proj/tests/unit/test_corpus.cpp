#include <doctest.h>

#include <string>

#include "adorn/corpus.hpp"
#include "adorn/errors.hpp"

using adorn::report::json;

namespace {
std::string message_of(const json& j) {
  try {
    adorn::load_corpus(j);
  } catch (const adorn::InvalidArgument& e) {
    return e.what();
  }
  return "";
}
}  // namespace

TEST_CASE("abelian group strings") {
  CHECK(adorn::to_string(adorn::parse_invariants("Z^2 ⊕ Z/2")) == "Z^2 ⊕ Z/2");
  CHECK(adorn::to_string(adorn::parse_invariants("Z/2 + Z/3")) == "Z/6");
  CHECK(adorn::to_string(adorn::parse_invariants("Z/4 ⊕ Z/6 ⊕ Z")) == "Z ⊕ Z/2 ⊕ Z/12");
  CHECK(adorn::parse_invariants("trivial").is_trivial());
  CHECK(adorn::parse_invariants("Z/1").is_trivial());
  CHECK_THROWS_AS(adorn::parse_invariants("Q"), adorn::InvalidArgument);
  CHECK_THROWS_AS(adorn::parse_invariants("Z/0"), adorn::InvalidArgument);
  CHECK_THROWS_AS(adorn::parse_invariants("Z ⊕"), adorn::InvalidArgument);
}

TEST_CASE("schema") {
  const auto ok = adorn::load_corpus(json::parse(R"([
    {"name": "a", "input": "< x | x^2 >", "expect": {"abelianization": "Z/2", "doa": 1}},
    {"name": "b", "input": {"zoo": "fuchsian", "params": "0,2,3,7"}, "expect": {"seifert_branch": "Perfect"}},
    {"name": "c", "input": "< x | >", "expect": {"alexander": [1]}}
  ])"));
  REQUIRE(ok.size() == 3);
  CHECK(ok[1].input.params == std::vector<long>{0, 2, 3, 7});
  CHECK(ok[1].input.describe() == "zoo:fuchsian 0,2,3,7");
  CHECK(ok[0].expect.doa == 1u);

  const std::string m = message_of(json::parse(R"([
    {"name": "bad key", "input": "< x | >", "expect": {"colour": "red"}},
    {"name": "fine", "input": "< x | >"},
    {"name": "bad verdict", "input": "< x | >", "expect": {"verdict": "Maybe"}},
    {"name": "branch on text", "input": "< x | >", "expect": {"seifert_branch": "Perfect"}},
    {"name": "fine", "input": "< y | >"}
  ])"));
  CHECK(m.find("bad key") != std::string::npos);
  CHECK(m.find("bad verdict") != std::string::npos);
  CHECK(m.find("branch on text") != std::string::npos);
  CHECK(m.find("duplicate") != std::string::npos);
  CHECK_THROWS_AS(adorn::load_corpus(json::object()), adorn::InvalidArgument);
  CHECK_THROWS_AS(adorn::load_corpus_file("/nonexistent/corpus.json"), adorn::InvalidArgument);
}

TEST_CASE("running entries") {
  const auto entries = adorn::load_corpus(json::parse(R"([
    {"name": "S3", "input": "< a, b | a^2, b^2, (a b)^3 >",
     "expect": {"abelianization": "Z/2", "verdict": "AdorableCertified", "doa": 2}},
    {"name": "wrong", "input": "< a | a^3 >", "expect": {"abelianization": "Z/2"}},
    {"name": "broken", "input": "< a | b >", "expect": {"abelianization": "trivial"}}
  ])"));
  const auto out = adorn::run_corpus(entries);
  REQUIRE(out.size() == 3);
  CHECK(out[0].pass());
  CHECK(out[0].checks.size() == 3);
  CHECK_FALSE(out[1].pass());
  CHECK(out[1].checks[0].actual == "Z/3");
  CHECK_FALSE(out[2].pass());
  CHECK_FALSE(out[2].error.empty());
}

TEST_CASE("shipped corpus passes") {
  const auto entries = adorn::load_corpus_file(std::string(ADORN_SOURCE_DIR) + "/corpus/groups.json");
  CHECK(entries.size() >= 20);
  for (const auto& o : adorn::run_corpus(entries)) {
    std::string why = o.error;
    for (const auto& c : o.checks)
      if (!c.pass) why += c.field + ": expected " + c.expected + ", got " + c.actual + "; ";
    INFO(o.name << ": " << why);
    CHECK(o.pass());
  }
}
