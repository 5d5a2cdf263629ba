#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "adorn/abelian.hpp"
#include "adorn/cosets.hpp"
#include "adorn/presentation.hpp"
#include "adorn/tietze.hpp"

namespace adorn {

struct SeriesLimits {
  std::size_t max_depth = 6;
  EnumerationCaps enumeration;
  SimplificationCaps simplification;
  double timeout_seconds = 60.0;

  void validate() const;
};

// One term G^i of the derived series.
struct StageReport {
  std::size_t depth = 0;
  PresentationStats stats;
  AbelianInvariants invariants;  // of G^i / G^{i+1}
  bool partially_simplified = false;
  std::optional<std::size_t> certified_free_rank;
  bool certified_trivial = false;
  // Index of G^i in G^{i-1}; absent at depth 0.
  std::optional<std::size_t> index_in_previous;
  // Simplified presentation of G^i.
  GroupPresentation presentation;
};

struct AdorableCertified {
  std::size_t doa;
};

struct FreeRankAtLeast2 {
  std::size_t stage;
  std::size_t rank;
};

struct StructuralPredicate {
  std::string name;
};

struct NonAdorableCertified {
  std::variant<FreeRankAtLeast2, StructuralPredicate> reason;
};

struct HaltedInfiniteAbelianization {
  std::size_t depth;
  std::size_t rank;
};

enum class LimitHit { MaxDepth, CosetCap, SimplificationCap, Timeout };

struct Inconclusive {
  std::size_t depth;
  std::vector<LimitHit> limits_hit;
};

using SeriesVerdict =
    std::variant<AdorableCertified, NonAdorableCertified, HaltedInfiniteAbelianization, Inconclusive>;

std::string kind_name(const SeriesVerdict& v);
std::string detail(const SeriesVerdict& v);
std::string to_string(LimitHit l);

struct SeriesResult {
  std::vector<StageReport> stages;
  SeriesVerdict verdict;
};

// Optional persistence of computed stages, keyed by a content hash of the
// parent stage presentation and the limits.
struct CachedStage {
  GroupPresentation presentation;
  bool partially_simplified = false;
  std::size_t index = 0;
};

class StageCache {
 public:
  virtual ~StageCache() = default;
  virtual std::optional<CachedStage> load(const std::string& key) = 0;
  virtual void store(const std::string& key, const CachedStage& stage) = 0;
};

// Stable key for (presentation, limits); FNV-1a over a canonical encoding.
std::string stage_key(const GroupPresentation& p, const SeriesLimits& lim);

// Iterates abelianize -> commutator coset table -> Reidemeister-Schreier ->
// simplify. Stops on:
//   trivial abelianization at stage i          -> AdorableCertified(i)
//   stage free of rank >= 2 (fully simplified) -> NonAdorableCertified
//   stage free of rank 1                       -> AdorableCertified(i + 1)
//   infinite abelianization otherwise          -> HaltedInfiniteAbelianization
//   any limit reached                          -> Inconclusive
SeriesResult derived_series(const GroupPresentation& p, const SeriesLimits& lim = {},
                            StageCache* cache = nullptr);

// Degree of adorability when certified, nullopt otherwise.
std::optional<std::size_t> doa(const GroupPresentation& p, const SeriesLimits& lim = {});

// A chain G = G_0 > G_1 > ... > G_n; level i + 1 is given by subgroup
// generator words over p's generators.
using FiltrationChain = std::vector<std::vector<Word>>;

enum class CertificateStatus {
  Accepted,
  NotContained,
  NormalityFails,
  QuotientNotAbelian,
  TerminalNotPerfect,
  CapExceeded,
};

std::string to_string(CertificateStatus s);

struct CertificateResult {
  CertificateStatus status = CertificateStatus::Accepted;
  std::optional<std::size_t> level;   // failing level (1-based), if any
  std::vector<std::size_t> indices;   // [G_{i-1} : G_i], 0 when infinite
  std::string detail;

  bool accepted() const { return status == CertificateStatus::Accepted; }
};

// Checks each G_{i+1} <= G_i is normal with abelian quotient and G_n is
// perfect, which witnesses adorability. Levels must have finite index in
// the previous one, except a trivial terminal level below a stage whose
// simplified presentation is free of rank <= 1.
CertificateResult verify_filtration(const GroupPresentation& p, const FiltrationChain& chain,
                                    const SeriesLimits& lim = {});

}  // namespace adorn
