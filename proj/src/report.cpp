#include "adorn/report.hpp"

#include "adorn/errors.hpp"
#include "adorn/parse.hpp"

namespace adorn::report {

json integer(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw InvalidArgument("bad integer " + j.dump());
    return z;
  }
  throw InvalidArgument("expected an integer, got " + j.dump());
}

json to_json(const AbelianInvariants& inv) {
  json t = json::array();
  for (const Integer& d : inv.torsion) t.push_back(integer(d));
  return {{"rank", inv.rank}, {"torsion", t}, {"text", to_string(inv)}};
}

AbelianInvariants invariants_from(const json& j) {
  if (!j.is_object() || !j.contains("rank")) throw InvalidArgument("abelian invariants need a rank: " + j.dump());
  AbelianInvariants inv;
  inv.rank = j.at("rank").get<std::size_t>();
  if (j.contains("torsion"))
    for (const json& d : j.at("torsion")) inv.torsion.push_back(integer_from(d));
  return inv;
}

json to_json(const PresentationStats& s) {
  return {{"n_generators", s.n_generators}, {"n_relators", s.n_relators}, {"total_length", s.total_length}};
}

json to_json(const GroupPresentation& p) {
  json rels = json::array();
  for (const Word& r : p.relators()) rels.push_back(format_word(r, p.generator_names()));
  return {{"name", p.name()}, {"generators", p.generator_names()}, {"relators", rels}, {"text", to_string(p)}};
}

GroupPresentation presentation_from(const json& j) {
  return parse_presentation(j.at("text").get<std::string>(), j.value("name", std::string()));
}

json to_json(const SeriesLimits& lim) {
  return {{"max_depth", lim.max_depth},
          {"max_cosets", lim.enumeration.max_cosets},
          {"max_deductions", lim.enumeration.max_deductions},
          {"max_generators", lim.simplification.max_generators},
          {"max_total_relator_length", lim.simplification.max_total_relator_length},
          {"max_passes", lim.simplification.max_passes},
          {"timeout_seconds", lim.timeout_seconds}};
}

json to_json(const StageReport& s) {
  json flags = json::array();
  if (s.partially_simplified) flags.push_back("PartiallySimplified");
  if (s.certified_free_rank) flags.push_back("CertifiedFree(" + std::to_string(*s.certified_free_rank) + ")");
  if (s.certified_trivial) flags.push_back("CertifiedTrivial");
  json j = {{"depth", s.depth},
            {"stats", to_json(s.stats)},
            {"invariants", to_json(s.invariants)},
            {"flags", flags},
            {"presentation", to_json(s.presentation)}};
  j["index_in_previous"] = s.index_in_previous ? json(*s.index_in_previous) : json(nullptr);
  j["certified_free_rank"] = s.certified_free_rank ? json(*s.certified_free_rank) : json(nullptr);
  return j;
}

json to_json(const SeriesVerdict& v) {
  json j = {{"kind", kind_name(v)}, {"detail", detail(v)}};
  if (const auto* a = std::get_if<AdorableCertified>(&v)) j["doa"] = a->doa;
  if (const auto* n = std::get_if<NonAdorableCertified>(&v)) {
    if (const auto* f = std::get_if<FreeRankAtLeast2>(&n->reason)) {
      j["reason"] = "FreeRankAtLeast2";
      j["stage"] = f->stage;
      j["rank"] = f->rank;
    } else {
      j["reason"] = "StructuralPredicate";
      j["predicate"] = std::get<StructuralPredicate>(n->reason).name;
    }
  }
  if (const auto* h = std::get_if<HaltedInfiniteAbelianization>(&v)) {
    j["depth"] = h->depth;
    j["rank"] = h->rank;
  }
  if (const auto* i = std::get_if<Inconclusive>(&v)) {
    j["depth"] = i->depth;
    json hits = json::array();
    for (LimitHit l : i->limits_hit) hits.push_back(to_string(l));
    j["limits_hit"] = hits;
  }
  return j;
}

json to_json(const SeriesResult& r) {
  json stages = json::array();
  for (const StageReport& s : r.stages) stages.push_back(to_json(s));
  return {{"stages", stages}, {"verdict", to_json(r.verdict)}};
}

json to_json(const LaurentPoly& p) {
  json coeffs = json::array();
  const long low = p.is_zero() ? 0 : p.min_exponent();
  if (!p.is_zero())
    for (long e = low; e <= p.max_exponent(); ++e) coeffs.push_back(integer(p.coefficient(e)));
  return {{"text", to_string(p)}, {"coefficients", coeffs}, {"low", low}};
}

json to_json(const KnotReport& r) {
  return {{"delta", to_json(r.delta)},
          {"degree", r.degree},
          {"adorable", r.adorable},
          {"verdict", r.adorable ? "Adorable" : "NotAdorable"},
          {"derived_quotient_rank", r.derived_quotient_rank},
          {"rank_provenance", r.rank_provenance},
          {"value_at_one_is_unit", r.value_at_one_is_unit},
          {"symmetric", r.symmetric},
          {"even_degree", r.even_degree},
          {"notes", r.notes}};
}

json to_json(const SeifertClassification& c) {
  return {{"branch", to_string(c.branch)}, {"summary", c.summary}, {"trace", c.trace}};
}

json to_json(const FreeProductVerdict& v) {
  json certs = json::array();
  for (const auto& c : v.certificates) certs.push_back({{"method", c.method}, {"detail", c.detail}});
  json j = {{"kind", to_string(v.kind)}, {"note", v.note}, {"certificates", certs}};
  j["doa"] = v.doa ? json(*v.doa) : json(nullptr);
  return j;
}

json to_json(const CertificateResult& c) {
  json j = {{"status", to_string(c.status)}, {"indices", c.indices}, {"detail", c.detail}};
  j["level"] = c.level ? json(*c.level) : json(nullptr);
  return j;
}

}  // namespace adorn::report
