#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adorn/derived.hpp"
#include "adorn/report.hpp"

namespace adorn {

// A presentation given as text or as a zoo reference.
struct GroupInput {
  std::string text;  // used when zoo is empty
  std::string zoo;
  std::vector<long> params;

  bool is_zoo() const { return !zoo.empty(); }
  std::string describe() const;
};

GroupPresentation resolve(const GroupInput& in);

struct CorpusExpect {
  std::optional<AbelianInvariants> abelianization;
  std::optional<std::string> verdict;  // kind name, e.g. "AdorableCertified"
  std::optional<std::size_t> doa;
  std::optional<LaurentPoly> alexander;
  std::optional<SeifertBranch> seifert_branch;
};

struct CorpusEntry {
  std::string name;
  GroupInput input;
  CorpusExpect expect;
};

// Validates the schema; throws InvalidArgument listing every offending
// entry by name.
std::vector<CorpusEntry> load_corpus(const report::json& j);
std::vector<CorpusEntry> load_corpus_file(const std::string& path);

// Parses "trivial", "Z", "Z^2 ⊕ Z/2", "Z/12" (also accepts "+" for ⊕).
AbelianInvariants parse_invariants(const std::string& s);

struct CorpusCheck {
  std::string field;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct CorpusOutcome {
  std::string name;
  std::vector<CorpusCheck> checks;
  std::string error;  // set when the entry could not be evaluated
  double millis = 0;

  bool pass() const;
};

CorpusOutcome run_corpus_entry(const CorpusEntry& e, const SeriesLimits& lim = {});

// Entries run concurrently; results keep the input order.
std::vector<CorpusOutcome> run_corpus(const std::vector<CorpusEntry>& entries, const SeriesLimits& lim = {});

}  // namespace adorn
