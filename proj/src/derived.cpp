#include "adorn/derived.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>

#include "adorn/errors.hpp"
#include "adorn/rewriting.hpp"

namespace adorn {

void SeriesLimits::validate() const {
  if (max_depth == 0 || !(timeout_seconds > 0)) throw InvalidArgument("series limits must be strictly positive");
  enumeration.validate();
  simplification.validate();
}

std::string to_string(LimitHit l) {
  switch (l) {
    case LimitHit::MaxDepth: return "MaxDepth";
    case LimitHit::CosetCap: return "CosetCap";
    case LimitHit::SimplificationCap: return "SimplificationCap";
    case LimitHit::Timeout: return "Timeout";
  }
  return "?";
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string kind_name(const SeriesVerdict& v) {
  return std::visit(Overloaded{
                        [](const AdorableCertified&) { return std::string("AdorableCertified"); },
                        [](const NonAdorableCertified&) { return std::string("NonAdorableCertified"); },
                        [](const HaltedInfiniteAbelianization&) {
                          return std::string("HaltedInfiniteAbelianization");
                        },
                        [](const Inconclusive&) { return std::string("Inconclusive"); },
                    },
                    v);
}

std::string detail(const SeriesVerdict& v) {
  return std::visit(
      Overloaded{
          [](const AdorableCertified& a) { return "doa=" + std::to_string(a.doa); },
          [](const NonAdorableCertified& n) {
            return std::visit(Overloaded{
                                  [](const FreeRankAtLeast2& f) {
                                    return "FreeRankAtLeast2(stage=" + std::to_string(f.stage) +
                                           ", rank=" + std::to_string(f.rank) + ")";
                                  },
                                  [](const StructuralPredicate& s) {
                                    return "StructuralPredicate(" + s.name + ")";
                                  },
                              },
                              n.reason);
          },
          [](const HaltedInfiniteAbelianization& h) {
            return "depth=" + std::to_string(h.depth) + ", rank=" + std::to_string(h.rank);
          },
          [](const Inconclusive& i) {
            std::string s = "depth=" + std::to_string(i.depth) + ", limits=";
            for (std::size_t k = 0; k < i.limits_hit.size(); ++k)
              s += (k ? "," : "") + to_string(i.limits_hit[k]);
            return s;
          },
      },
      v);
}

std::string stage_key(const GroupPresentation& p, const SeriesLimits& lim) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(p.n_generators());
  mix(p.relators().size());
  for (const Word& r : p.relators()) {
    mix(r.size());
    for (Letter l : r) mix(l.column());
  }
  mix(lim.enumeration.max_cosets);
  mix(lim.enumeration.max_deductions);
  mix(lim.simplification.max_generators);
  mix(lim.simplification.max_total_relator_length);
  mix(lim.simplification.max_passes);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SeriesResult derived_series(const GroupPresentation& p, const SeriesLimits& lim, StageCache* cache) {
  lim.validate();
  using Clock = std::chrono::steady_clock;
  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(lim.timeout_seconds));

  SeriesResult out{{}, Inconclusive{0, {}}};
  SimplifyResult first = tietze_simplify(p, lim.simplification);
  GroupPresentation current = std::move(first.presentation);
  bool partial = first.partially_simplified;
  std::optional<std::size_t> index;

  for (std::size_t depth = 0;; ++depth) {
    StageReport stage;
    stage.depth = depth;
    stage.stats = depth == 0 ? p.stats() : current.stats();
    stage.invariants = abelianization(current);
    stage.partially_simplified = partial;
    stage.index_in_previous = index;
    stage.certified_trivial = current.n_generators() == 0;
    if (current.relators().empty() && !partial) stage.certified_free_rank = current.n_generators();
    stage.presentation = current;
    out.stages.push_back(stage);

    if (stage.invariants.is_trivial()) {
      out.verdict = AdorableCertified{depth};
      return out;
    }
    if (stage.certified_free_rank) {
      const std::size_t rank = *stage.certified_free_rank;
      if (rank >= 2)
        out.verdict = NonAdorableCertified{FreeRankAtLeast2{depth, rank}};
      else
        out.verdict = AdorableCertified{depth + 1};
      return out;
    }
    if (!stage.invariants.is_finite()) {
      if (current.relators().empty()) {
        // free, but only certifiable from a fully simplified stage
        out.verdict = Inconclusive{depth, {LimitHit::SimplificationCap}};
      } else {
        out.verdict = HaltedInfiniteAbelianization{depth, stage.invariants.rank};
      }
      return out;
    }
    if (depth + 1 > lim.max_depth) {
      out.verdict = Inconclusive{depth, {LimitHit::MaxDepth}};
      return out;
    }
    if (Clock::now() > deadline) {
      out.verdict = Inconclusive{depth, {LimitHit::Timeout}};
      return out;
    }

    const std::string key = cache ? stage_key(current, lim) : std::string();
    std::optional<CachedStage> hit = cache ? cache->load(key) : std::nullopt;
    if (!hit) {
      try {
        const CosetTable table = commutator_coset_table(current, lim.enumeration);
        RewriteResult rs = reidemeister_schreier(current, table, lim.simplification);
        hit = CachedStage{std::move(rs.presentation), rs.partially_simplified, table.n_cosets()};
      } catch (const CapExceeded&) {
        out.verdict = Inconclusive{depth, {LimitHit::CosetCap}};
        return out;
      }
      if (cache) cache->store(key, *hit);
    }
    current = hit->presentation.renamed(p.name().empty() ? "" : p.name() + "^" + std::to_string(depth + 1));
    partial = hit->partially_simplified;
    index = hit->index;
  }
}

std::optional<std::size_t> doa(const GroupPresentation& p, const SeriesLimits& lim) {
  const SeriesResult r = derived_series(p, lim);
  if (const auto* a = std::get_if<AdorableCertified>(&r.verdict)) return a->doa;
  return std::nullopt;
}

std::string to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::Accepted: return "Accepted";
    case CertificateStatus::NotContained: return "NotContained";
    case CertificateStatus::NormalityFails: return "NormalityFails";
    case CertificateStatus::QuotientNotAbelian: return "QuotientNotAbelian";
    case CertificateStatus::TerminalNotPerfect: return "TerminalNotPerfect";
    case CertificateStatus::CapExceeded: return "CapExceeded";
  }
  return "?";
}

CertificateResult verify_filtration(const GroupPresentation& p, const FiltrationChain& chain,
                                    const SeriesLimits& lim) {
  lim.validate();
  CertificateResult result;
  auto fail = [&result](CertificateStatus s, std::size_t level, std::string why) {
    result.status = s;
    result.level = level;
    result.detail = std::move(why);
    return result;
  };

  // Level 0 is the whole group: a one-coset table.
  CosetTable table(p.n_generators(), 1, std::vector<CosetTable::Coset>(2 * p.n_generators(), 0));
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const std::size_t level = i + 1;
    const auto& words = chain[i];
    for (const Word& w : words)
      if (table.trace(0, w) != 0)
        return fail(CertificateStatus::NotContained, level, "generator not in the previous level");

    const SchreierSystem upper(table);
    std::optional<CosetTable> next;
    try {
      next = todd_coxeter(p, words, lim.enumeration);
    } catch (const CapExceeded& e) {
      bool trivial = true;
      for (const Word& w : words) trivial = trivial && free_reduce(w).empty();
      if (!trivial || level != chain.size())
        return fail(CertificateStatus::CapExceeded, level, e.what());
      // G_n = 1 below an infinite G_{n-1}: the quotient is G_{n-1} itself,
      // abelian when it is certified free of rank <= 1.
      const RewriteResult rs = reidemeister_schreier(p, table, lim.simplification);
      const auto& q = rs.presentation;
      if (rs.partially_simplified || !q.relators().empty() || q.n_generators() > 1)
        return fail(CertificateStatus::CapExceeded, level,
                    "trivial terminal level has infinite index and the previous level is not "
                    "certified cyclic");
      result.indices.push_back(0);
      result.detail = "terminal level trivial";
      return result;
    }

    if (next->n_cosets() % table.n_cosets() != 0)
      return fail(CertificateStatus::NotContained, level, "index does not divide");
    const std::size_t index = next->n_cosets() / table.n_cosets();

    for (const Word& s : upper.generator_words())
      for (const Word& w : words)
        if (next->trace(0, s.inverse() * w * s) != 0)
          return fail(CertificateStatus::NormalityFails, level, "conjugate leaves the subgroup");

    // G_{i} / G_{i+1} presented by G_i's presentation plus the rewritten
    // generators of G_{i+1}.
    const GroupPresentation raw = reidemeister_schreier_raw(p, upper);
    std::vector<Word> relators = raw.relators();
    for (const Word& w : words) relators.push_back(upper.rewrite(w));
    const GroupPresentation quotient(raw.name(), raw.generator_names(), std::move(relators));
    const AbelianInvariants inv = abelianization(quotient);
    if (!inv.is_finite() || inv.order() != index)
      return fail(CertificateStatus::QuotientNotAbelian, level,
                  "quotient abelianization " + to_string(inv) + " vs index " + std::to_string(index));

    result.indices.push_back(index);
    table = *next;
  }

  const bool perfect = chain.empty()
                           ? is_perfect(p)
                           : is_perfect(reidemeister_schreier(p, table, lim.simplification).presentation);
  if (!perfect)
    return fail(CertificateStatus::TerminalNotPerfect, chain.size(), "terminal subgroup is not perfect");
  return result;
}

}  // namespace adorn
