#include "adorn/corpus.hpp"

#include <chrono>
#include <fstream>
#include <set>

#include "adorn/errors.hpp"
#include "adorn/parse.hpp"

namespace adorn {

std::string GroupInput::describe() const {
  if (!is_zoo()) return text;
  std::string s = "zoo:" + zoo;
  for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : " ") + std::to_string(params[i]);
  return s;
}

GroupPresentation resolve(const GroupInput& in) {
  return in.is_zoo() ? make(in.zoo, in.params) : parse_presentation(in.text);
}

AbelianInvariants parse_invariants(const std::string& text) {
  std::string s;
  // normalize the direct-sum sign to '+'
  for (std::size_t i = 0; i < text.size();) {
    if (text.compare(i, 3, "⊕") == 0) {
      s += '+';
      i += 3;
    } else {
      if (text[i] != ' ') s += text[i];
      ++i;
    }
  }
  if (s == "trivial" || s == "1" || s == "0") return {};
  std::size_t rank = 0;
  std::vector<Integer> cyclic;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t end = std::min(s.find('+', pos), s.size());
    const std::string tok = s.substr(pos, end - pos);
    pos = end + 1;
    Integer d;
    if (tok == "Z") {
      ++rank;
    } else if (tok.rfind("Z^", 0) == 0 && d.set_str(tok.substr(2), 10) == 0 && d >= 0) {
      rank += d.get_ui();
    } else if (tok.rfind("Z/", 0) == 0 && d.set_str(tok.substr(2), 10) == 0 && d >= 1) {
      cyclic.push_back(d);
    } else {
      throw InvalidArgument("cannot parse abelian group \"" + text + "\"");
    }
  }
  // canonical divisor chain of the torsion part
  IntMatrix m(cyclic.size(), cyclic.size());
  for (std::size_t i = 0; i < cyclic.size(); ++i) m(i, i) = cyclic[i];
  AbelianInvariants inv = cokernel_invariants(m);
  inv.rank = rank;
  return inv;
}

namespace {

const std::set<std::string> kEntryKeys = {"name", "input", "expect"};
const std::set<std::string> kExpectKeys = {"abelianization", "verdict", "doa", "alexander", "seifert_branch"};
const std::set<std::string> kVerdictKinds = {"AdorableCertified", "NonAdorableCertified",
                                             "HaltedInfiniteAbelianization", "Inconclusive"};

GroupInput input_from(const report::json& j) {
  GroupInput in;
  if (j.is_string()) {
    in.text = j.get<std::string>();
    return in;
  }
  if (!j.is_object() || !j.contains("zoo")) throw InvalidArgument("input must be a string or {zoo, params}");
  for (const auto& [k, v] : j.items())
    if (k != "zoo" && k != "params") throw InvalidArgument("unknown input key \"" + k + "\"");
  in.zoo = j.at("zoo").get<std::string>();
  if (j.contains("params")) {
    const auto& p = j.at("params");
    if (p.is_string())
      in.params = parse_params(p.get<std::string>());
    else
      in.params = p.get<std::vector<long>>();
  }
  return in;
}

LaurentPoly poly_from(const report::json& j) {
  if (j.is_array()) {
    LaurentPoly p;
    long e = 0;
    for (const auto& c : j) p += LaurentPoly::monomial(report::integer_from(c), e++);
    return p.normalized();
  }
  throw InvalidArgument("alexander expectation must be a string or a coefficient array");
}

CorpusEntry entry_from(const report::json& j) {
  if (!j.is_object()) throw InvalidArgument("entry is not an object");
  for (const auto& [k, v] : j.items())
    if (!kEntryKeys.count(k)) throw InvalidArgument("unknown entry key \"" + k + "\"");
  CorpusEntry e;
  e.name = j.at("name").get<std::string>();
  e.input = input_from(j.at("input"));
  if (!j.contains("expect")) return e;
  const auto& x = j.at("expect");
  if (!x.is_object()) throw InvalidArgument("expect must be an object");
  for (const auto& [k, v] : x.items())
    if (!kExpectKeys.count(k)) throw InvalidArgument("unknown expectation key \"" + k + "\"");
  if (x.contains("abelianization")) {
    const auto& a = x.at("abelianization");
    e.expect.abelianization = a.is_string() ? parse_invariants(a.get<std::string>()) : report::invariants_from(a);
  }
  if (x.contains("verdict")) {
    const std::string v = x.at("verdict").get<std::string>();
    if (!kVerdictKinds.count(v)) throw InvalidArgument("unknown verdict kind \"" + v + "\"");
    e.expect.verdict = v;
  }
  if (x.contains("doa")) e.expect.doa = x.at("doa").get<std::size_t>();
  if (x.contains("alexander")) {
    const auto& a = x.at("alexander");
    e.expect.alexander = a.is_string() ? parse_laurent(a.get<std::string>()).normalized() : poly_from(a);
  }
  if (x.contains("seifert_branch")) {
    if (e.input.zoo != "fuchsian") throw InvalidArgument("seifert_branch applies only to fuchsian zoo inputs");
    e.expect.seifert_branch = parse_seifert_branch(x.at("seifert_branch").get<std::string>());
  }
  return e;
}

}  // namespace

std::vector<CorpusEntry> load_corpus(const report::json& j) {
  if (!j.is_array()) throw InvalidArgument("corpus must be a JSON array");
  std::vector<CorpusEntry> out;
  std::string errors;
  std::set<std::string> names;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string label =
        j[i].is_object() && j[i].contains("name") && j[i]["name"].is_string() ? j[i]["name"].get<std::string>()
                                                                               : "#" + std::to_string(i);
    try {
      out.push_back(entry_from(j[i]));
      if (!names.insert(label).second) throw InvalidArgument("duplicate entry name");
    } catch (const std::exception& e) {
      errors += "\n  " + label + ": " + e.what();
    }
  }
  if (!errors.empty()) throw InvalidArgument("corpus schema violations:" + errors);
  return out;
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open corpus file " + path);
  report::json j;
  try {
    j = report::json::parse(in);
  } catch (const report::json::parse_error& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
  return load_corpus(j);
}

bool CorpusOutcome::pass() const {
  if (!error.empty()) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

CorpusOutcome run_corpus_entry(const CorpusEntry& e, const SeriesLimits& lim) {
  const auto start = std::chrono::steady_clock::now();
  CorpusOutcome out;
  out.name = e.name;
  auto check = [&out](std::string field, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    out.checks.push_back({std::move(field), pass, std::move(expected), std::move(actual)});
  };
  try {
    const GroupPresentation p = resolve(e.input);
    if (e.expect.abelianization)
      check("abelianization", to_string(*e.expect.abelianization), to_string(abelianization(p)));
    if (e.expect.verdict || e.expect.doa) {
      const SeriesResult r = derived_series(p, lim);
      if (e.expect.verdict) check("verdict", *e.expect.verdict, kind_name(r.verdict));
      if (e.expect.doa) {
        const auto* a = std::get_if<AdorableCertified>(&r.verdict);
        check("doa", std::to_string(*e.expect.doa), a ? std::to_string(a->doa) : "unknown");
      }
    }
    if (e.expect.alexander) check("alexander", to_string(*e.expect.alexander), to_string(alexander_polynomial(p)));
    if (e.expect.seifert_branch) {
      SeifertData s;
      s.base_genus = static_cast<std::size_t>(e.input.params.at(0));
      s.cone_indices.assign(e.input.params.begin() + 1, e.input.params.end());
      check("seifert_branch", to_string(*e.expect.seifert_branch), to_string(classify_seifert(s).branch));
    }
  } catch (const std::exception& ex) {
    out.error = ex.what();
  }
  out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<CorpusOutcome> run_corpus(const std::vector<CorpusEntry>& entries, const SeriesLimits& lim) {
  std::vector<CorpusOutcome> out(entries.size());
  const long n = static_cast<long>(entries.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[i] = run_corpus_entry(entries[i], lim);
  return out;
}

}  // namespace adorn
