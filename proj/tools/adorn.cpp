// adorn: command-line front end.
//
// Exit codes: 0 success, 1 corpus failures, 2 invalid input,
// 3 Inconclusive verdict under --strict.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "adorn/alexander.hpp"
#include "adorn/cache.hpp"
#include "adorn/corpus.hpp"
#include "adorn/derived.hpp"
#include "adorn/errors.hpp"
#include "adorn/parse.hpp"
#include "adorn/report.hpp"
#include "adorn/seifert.hpp"
#include "adorn/zoo.hpp"

namespace {

using adorn::report::json;
using Clock = std::chrono::steady_clock;

constexpr int kExitInvalid = 2;
constexpr int kExitInconclusive = 3;

struct InputOptions {
  std::string presentation;
  std::string zoo;
  std::string params;
};

struct LimitOptions {
  std::size_t max_depth = adorn::SeriesLimits{}.max_depth;
  std::size_t max_cosets = adorn::EnumerationCaps{}.max_cosets;
  std::size_t max_gens = adorn::SimplificationCaps{}.max_generators;
  std::size_t max_length = adorn::SimplificationCaps{}.max_total_relator_length;
  double timeout = adorn::SeriesLimits{}.timeout_seconds;

  adorn::SeriesLimits limits() const {
    adorn::SeriesLimits lim;
    lim.max_depth = max_depth;
    lim.enumeration.max_cosets = max_cosets;
    lim.simplification.max_generators = max_gens;
    lim.simplification.max_total_relator_length = max_length;
    lim.timeout_seconds = timeout;
    lim.validate();
    return lim;
  }
};

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("presentation", in.presentation, "presentation text such as '< a, b | a^2, b^3 >', or a file");
  cmd->add_option("--zoo", in.zoo, "named family (see `adorn zoo --list`)");
  cmd->add_option("--params", in.params, "comma-separated family parameters");
}

void add_limits(CLI::App* cmd, LimitOptions& l) {
  cmd->add_option("--max-depth", l.max_depth, "maximum derived-series depth")->capture_default_str();
  cmd->add_option("--max-cosets", l.max_cosets, "coset definitions per enumeration")->capture_default_str();
  cmd->add_option("--max-gens", l.max_gens, "generator cap after simplification")->capture_default_str();
  cmd->add_option("--max-length", l.max_length, "total relator length cap")->capture_default_str();
  cmd->add_option("--timeout", l.timeout, "wall-clock budget in seconds")->capture_default_str();
}

adorn::GroupInput to_group_input(const InputOptions& in) {
  adorn::GroupInput g;
  if (!in.zoo.empty()) {
    if (!in.presentation.empty()) throw adorn::InvalidArgument("give either a presentation or --zoo, not both");
    g.zoo = in.zoo;
    g.params = adorn::parse_params(in.params);
    return g;
  }
  if (in.presentation.empty()) throw adorn::InvalidArgument("no presentation given");
  g.text = in.presentation;
  std::error_code ec;
  if (in.presentation.find('<') == std::string::npos && std::filesystem::is_regular_file(in.presentation, ec)) {
    std::ifstream f(in.presentation);
    std::stringstream ss;
    ss << f.rdbuf();
    g.text = ss.str();
  }
  return g;
}

json envelope(const std::string& command, const adorn::GroupInput& in) {
  json j;
  j["command"] = command;
  j["input"] = in.is_zoo() ? json{{"zoo", in.zoo}, {"params", in.params}} : json(in.text);
  j["limits"] = nullptr;
  j["stages"] = json::array();
  return j;
}

double millis_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

// Left-justifies in terminal columns; "⊕" is three bytes wide in UTF-8.
std::string pad(const std::string& s, std::size_t width) {
  std::size_t cols = 0;
  for (unsigned char c : s) cols += (c & 0xC0) != 0x80;
  return cols >= width ? s : s + std::string(width - cols, ' ');
}

void print_stage_table(const adorn::SeriesResult& r) {
  std::printf("%-6s %-24s %6s %6s %8s %7s  %s\n", "depth", "G^i/G^(i+1)", "gens", "rels", "length", "index",
              "flags");
  for (const auto& s : r.stages) {
    std::string flags;
    if (s.partially_simplified) flags += "PartiallySimplified ";
    if (s.certified_free_rank) flags += "CertifiedFree(" + std::to_string(*s.certified_free_rank) + ") ";
    if (s.certified_trivial) flags += "CertifiedTrivial ";
    const std::string index = s.index_in_previous ? std::to_string(*s.index_in_previous) : "-";
    if (!flags.empty()) flags.pop_back();
    std::printf("%-6zu %s %6zu %6zu %8zu %7s  %s\n", s.depth, pad(adorn::to_string(s.invariants), 24).c_str(),
                s.stats.n_generators, s.stats.n_relators, s.stats.total_length, index.c_str(), flags.c_str());
  }
}

int cmd_abelianize(const InputOptions& io, bool as_json) {
  const auto t0 = Clock::now();
  const adorn::GroupInput in = to_group_input(io);
  const adorn::GroupPresentation p = adorn::resolve(in);
  const adorn::AbelianInvariants inv = adorn::abelianization(p);
  if (as_json) {
    json j = envelope("abelianize", in);
    j["abelianization"] = adorn::report::to_json(inv);
    j["verdict"] = {{"kind", "Abelianization"}, {"detail", adorn::to_string(inv)}};
    j["timings_ms"] = {{"total", millis_since(t0)}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << adorn::to_string(inv) << '\n';
  }
  return 0;
}

int cmd_series(const InputOptions& io, const LimitOptions& lo, bool as_json, bool strict) {
  const auto t0 = Clock::now();
  const adorn::GroupInput in = to_group_input(io);
  const adorn::GroupPresentation p = adorn::resolve(in);
  const adorn::SeriesLimits lim = lo.limits();
  std::unique_ptr<adorn::FileStageCache> cache;
  if (const char* dir = std::getenv("ADORN_CACHE_DIR"); dir && *dir)
    cache = std::make_unique<adorn::FileStageCache>(dir);
  const adorn::SeriesResult r = adorn::derived_series(p, lim, cache.get());
  if (as_json) {
    json j = envelope("series", in);
    const json body = adorn::report::to_json(r);
    j["limits"] = adorn::report::to_json(lim);
    j["stages"] = body["stages"];
    j["verdict"] = body["verdict"];
    j["timings_ms"] = {{"total", millis_since(t0)}};
    std::cout << j.dump(2) << '\n';
  } else {
    print_stage_table(r);
    std::cout << "verdict: " << adorn::kind_name(r.verdict) << " (" << adorn::detail(r.verdict) << ")\n";
  }
  if (strict && std::holds_alternative<adorn::Inconclusive>(r.verdict)) return kExitInconclusive;
  return 0;
}

int cmd_alexander(const InputOptions& io, bool as_json) {
  const auto t0 = Clock::now();
  const adorn::GroupInput in = to_group_input(io);
  const adorn::KnotReport k = adorn::knot_adorability_report(adorn::resolve(in));
  const std::string verdict = k.adorable ? "Adorable" : "NotAdorable";
  if (as_json) {
    json j = envelope("alexander", in);
    j["alexander"] = adorn::report::to_json(k);
    j["verdict"] = {{"kind", verdict}, {"detail", "delta = " + adorn::to_string(k.delta)}};
    j["timings_ms"] = {{"total", millis_since(t0)}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "Δ = " << adorn::to_string(k.delta) << ", " << verdict << '\n';
    for (const auto& n : k.notes) std::cout << "  " << n << '\n';
  }
  return 0;
}

int cmd_classify(std::size_t genus, const std::string& cones, bool boundary, bool as_json) {
  const auto t0 = Clock::now();
  adorn::SeifertData s;
  s.base_genus = genus;
  s.has_boundary = boundary;
  s.cone_indices = adorn::parse_params(cones);
  const adorn::SeifertClassification c = adorn::classify_seifert(s);
  if (as_json) {
    json j;
    j["command"] = "classify-seifert";
    j["input"] = {{"genus", genus}, {"cones", s.cone_indices}, {"boundary", boundary}};
    j["limits"] = nullptr;
    j["stages"] = json::array();
    j["classification"] = adorn::report::to_json(c);
    j["verdict"] = {{"kind", adorn::to_string(c.branch)}, {"detail", c.summary}};
    j["timings_ms"] = {{"total", millis_since(t0)}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << adorn::to_string(c.branch) << " (" << c.summary << ")\n";
    for (const auto& t : c.trace) std::cout << "  - " << t << '\n';
  }
  return 0;
}

int cmd_zoo(const std::string& name, const std::string& params, bool list, bool as_json) {
  if (list || name.empty()) {
    for (const auto& f : adorn::zoo_families())
      std::printf("%-18s %-14s %s\n", f.name.c_str(), f.params.empty() ? "-" : f.params.c_str(),
                  f.description.c_str());
    return 0;
  }
  const adorn::GroupPresentation p = adorn::make(name, adorn::parse_params(params));
  if (as_json)
    std::cout << adorn::report::to_json(p).dump(2) << '\n';
  else
    std::cout << adorn::to_string(p) << '\n';
  return 0;
}

int cmd_verify_corpus(const std::vector<std::string>& paths, const LimitOptions& lo, bool as_json) {
  const adorn::SeriesLimits lim = lo.limits();
  std::vector<adorn::CorpusEntry> entries;
  for (const auto& path : paths) {
    auto part = adorn::load_corpus_file(path);
    entries.insert(entries.end(), part.begin(), part.end());
  }
  const auto outcomes = adorn::run_corpus(entries, lim);
  std::size_t passed = 0;
  json rows = json::array();
  for (const auto& o : outcomes) {
    passed += o.pass();
    if (as_json) {
      json checks = json::array();
      for (const auto& c : o.checks)
        checks.push_back({{"field", c.field}, {"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}});
      rows.push_back({{"name", o.name}, {"pass", o.pass()}, {"checks", checks}, {"error", o.error},
                      {"millis", o.millis}});
      continue;
    }
    std::printf("%-4s %-36s %8.1f ms", o.pass() ? "PASS" : "FAIL", o.name.c_str(), o.millis);
    if (!o.error.empty()) std::printf("  error: %s", o.error.c_str());
    for (const auto& c : o.checks)
      if (!c.pass) std::printf("  %s: expected %s, got %s", c.field.c_str(), c.expected.c_str(), c.actual.c_str());
    std::printf("\n");
  }
  if (as_json)
    std::cout << json{{"command", "verify-corpus"}, {"entries", rows}, {"passed", passed},
                      {"total", outcomes.size()}}
                     .dump(2)
              << '\n';
  else
    std::printf("%zu/%zu entries passed\n", passed, outcomes.size());
  return passed == outcomes.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adorn: derived series and adorability of finitely presented groups"};
  app.require_subcommand(1);
  bool as_json = false;
  bool strict = false;
  app.add_flag("--json", as_json, "emit a JSON report");

  InputOptions input;
  LimitOptions limits;

  auto* abel = app.add_subcommand("abelianize", "abelian invariants of G/[G,G]");
  add_input(abel, input);
  abel->add_flag("--json", as_json, "emit a JSON report");

  auto* series = app.add_subcommand("series", "derived series with an adorability verdict");
  add_input(series, input);
  add_limits(series, limits);
  series->add_flag("--json", as_json, "emit a JSON report");
  series->add_flag("--strict", strict, "exit 3 when the verdict is Inconclusive");

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial and knot adorability criterion");
  add_input(alex, input);
  alex->add_flag("--json", as_json, "emit a JSON report");

  std::size_t genus = 0;
  std::string cones;
  bool boundary = false;
  auto* seif = app.add_subcommand("classify-seifert", "classify a Seifert fibered space by its base orbifold");
  seif->add_option("--genus", genus, "genus of the orientable base")->required();
  seif->add_option("--cones", cones, "comma-separated cone point indices");
  seif->add_flag("--boundary", boundary, "base has boundary");
  seif->add_flag("--json", as_json, "emit a JSON report");

  std::string zoo_name, zoo_params;
  bool zoo_list = false;
  auto* zoo = app.add_subcommand("zoo", "print a named family's presentation");
  zoo->add_option("name", zoo_name, "family name");
  zoo->add_option("--params", zoo_params, "comma-separated parameters");
  zoo->add_flag("--list", zoo_list, "list families");
  zoo->add_flag("--json", as_json, "emit JSON");

  std::vector<std::string> corpus_paths;
  auto* corpus = app.add_subcommand("verify-corpus", "run a regression corpus; exit 0 iff every entry passes");
  corpus->add_option("paths", corpus_paths, "corpus JSON files")->required();
  add_limits(corpus, limits);
  corpus->add_flag("--json", as_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*abel) return cmd_abelianize(input, as_json);
    if (*series) return cmd_series(input, limits, as_json, strict);
    if (*alex) return cmd_alexander(input, as_json);
    if (*seif) return cmd_classify(genus, cones, boundary, as_json);
    if (*zoo) return cmd_zoo(zoo_name, zoo_params, zoo_list, as_json);
    if (*corpus) return cmd_verify_corpus(corpus_paths, limits, as_json);
  } catch (const adorn::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}
