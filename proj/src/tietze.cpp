#include "adorn/tietze.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>

#include "adorn/errors.hpp"

namespace adorn {

namespace {

// Common-subword search is quadratic in relator length; above this total
// length only the linear steps run.
constexpr std::size_t kSubwordSearchMaxTotal = 2048;

class Simplifier {
 public:
  Simplifier(const GroupPresentation& p, const SimplificationCaps& caps)
      : name_(p.name()), names_(p.generator_names()), rels_(p.relators()), caps_(caps) {}

  SimplifyResult run() {
    std::size_t passes = 0;
    bool changed = true;
    while (changed) {
      if (passes == caps_.max_passes) {
        capped_ = true;
        break;
      }
      ++passes;
      changed = false;
      changed |= delete_trivial();
      changed |= delete_duplicates();
      while (eliminate_one()) {
        changed = true;
        delete_trivial();
        delete_duplicates();
      }
      while (substitute_one()) {
        changed = true;
        delete_trivial();
        delete_duplicates();
      }
    }
    if (names_.size() > caps_.max_generators) capped_ = true;
    return {GroupPresentation(name_, names_, rels_), capped_};
  }

 private:
  std::size_t total_length() const {
    std::size_t n = 0;
    for (const auto& r : rels_) n += r.size();
    return n;
  }

  bool delete_trivial() {
    bool changed = false;
    std::vector<Word> kept;
    kept.reserve(rels_.size());
    for (auto& r : rels_) {
      Word c = cyclically_reduce(r);
      if (c.size() != r.size()) changed = true;
      if (!c.empty()) kept.push_back(std::move(c));
    }
    rels_ = std::move(kept);
    return changed;
  }

  bool delete_duplicates() {
    std::set<Word> seen;
    std::vector<Word> kept;
    kept.reserve(rels_.size());
    for (auto& r : rels_)
      if (seen.insert(cyclic_key(r)).second) kept.push_back(std::move(r));
    const bool changed = kept.size() != rels_.size();
    rels_ = std::move(kept);
    return changed;
  }

  // Removes one generator that occurs exactly once in some relator, using
  // that relator to express it in the remaining generators.
  bool eliminate_one() {
    const std::size_t n = names_.size();
    // occ[r * n + g] = occurrences of g in relator r
    std::vector<std::size_t> occ(rels_.size() * n, 0);
    std::vector<std::size_t> total(n, 0);
    for (std::size_t r = 0; r < rels_.size(); ++r)
      for (Letter l : rels_[r]) {
        ++occ[r * n + l.gen()];
        ++total[l.gen()];
      }

    using Key = std::tuple<long, std::size_t, std::size_t, std::size_t>;
    std::optional<Key> best;
    bool skipped = false;
    const long current = static_cast<long>(total_length());
    for (std::size_t r = 0; r < rels_.size(); ++r) {
      const long len = static_cast<long>(rels_[r].size());
      for (std::size_t g = 0; g < n; ++g) {
        if (occ[r * n + g] != 1) continue;
        const long others = static_cast<long>(total[g] - 1);
        const long growth = others * (len - 2) - len;
        if (current + growth > static_cast<long>(caps_.max_total_relator_length)) {
          skipped = true;
          continue;
        }
        Key key{growth, static_cast<std::size_t>(len), g, r};
        if (!best || key < *best) best = key;
      }
    }
    if (!best) {
      capped_ |= skipped;
      return false;
    }

    const auto [growth, len, g, r] = *best;
    const Word& rel = rels_[r];
    std::size_t pos = 0;
    while (rel[pos].gen() != g) ++pos;
    const Word rot = rel.rotated(pos);
    Word rest(std::vector<Letter>(rot.begin() + 1, rot.end()));
    // g^e rest = 1  =>  g = rest^-1 (e = +1) or g = rest (e = -1)
    const Word image = rot[0].sign() > 0 ? rest.inverse() : rest;
    const Word image_inv = image.inverse();

    std::vector<Word> next;
    next.reserve(rels_.size() - 1);
    for (std::size_t i = 0; i < rels_.size(); ++i) {
      if (i == r) continue;
      Word w;
      for (Letter l : rels_[i]) {
        if (l.gen() == g)
          w.append(l.sign() > 0 ? image : image_inv);
        else
          w.push_back(l);
      }
      next.push_back(reindex_without(cyclically_reduce(w), g));
    }
    rels_ = std::move(next);
    names_.erase(names_.begin() + static_cast<long>(g));
    return true;
  }

  static Word reindex_without(const Word& w, std::size_t removed) {
    Word out;
    for (Letter l : w) {
      const std::size_t gen = l.gen() > removed ? l.gen() - 1 : l.gen();
      out.push_back(Letter(gen, l.sign()));
    }
    return out;
  }

  struct Match {
    std::size_t length = 0;
    std::size_t start_a = 0;
    std::size_t start_b = 0;
  };

  // Longest common subword of the cyclic words a and b, at most |a| long.
  static Match longest_common_cyclic(const Word& a, const Word& b) {
    const std::size_t na = a.size(), nb = b.size();
    const std::size_t limit = std::min(na, nb);
    Match best;
    std::vector<std::size_t> prev(2 * nb + 1, 0), cur(2 * nb + 1, 0);
    for (std::size_t i = 1; i <= 2 * na; ++i) {
      for (std::size_t j = 1; j <= 2 * nb; ++j) {
        if (a[(i - 1) % na] == b[(j - 1) % nb]) {
          cur[j] = std::min(prev[j - 1] + 1, limit);
          if (cur[j] > best.length) {
            best.length = cur[j];
            best.start_a = (i - cur[j]) % na;
            best.start_b = (j - cur[j]) % nb;
          }
        } else {
          cur[j] = 0;
        }
      }
      std::swap(prev, cur);
    }
    return best;
  }

  // Replaces a long common subword s of relator b, where a = s t, by t^-1.
  bool substitute_one() {
    if (total_length() > kSubwordSearchMaxTotal) return false;
    struct Candidate {
      long saving;
      std::size_t target, source;
      Word replacement;
    };
    std::optional<Candidate> best;
    for (std::size_t j = 0; j < rels_.size(); ++j) {
      for (std::size_t i = 0; i < rels_.size(); ++i) {
        if (i == j || rels_[i].size() > rels_[j].size()) continue;
        for (const Word& a : {rels_[i], rels_[i].inverse()}) {
          const Match m = longest_common_cyclic(a, rels_[j]);
          const long saving = 2 * static_cast<long>(m.length) - static_cast<long>(a.size());
          if (m.length < 3 || saving <= 0) continue;
          if (best && saving <= best->saving) continue;
          const Word ra = a.rotated(m.start_a);
          const Word rb = rels_[j].rotated(m.start_b);
          Word t(std::vector<Letter>(ra.begin() + static_cast<long>(m.length), ra.end()));
          Word v(std::vector<Letter>(rb.begin() + static_cast<long>(m.length), rb.end()));
          best = Candidate{saving, j, i, cyclically_reduce(t.inverse() * v)};
        }
      }
    }
    if (!best) return false;
    rels_[best->target] = std::move(best->replacement);
    return true;
  }

  std::string name_;
  std::vector<std::string> names_;
  std::vector<Word> rels_;
  SimplificationCaps caps_;
  bool capped_ = false;
};

}  // namespace

void SimplificationCaps::validate() const {
  if (max_generators == 0 || max_total_relator_length == 0 || max_passes == 0)
    throw InvalidArgument("simplification caps must be strictly positive");
}

SimplifyResult tietze_simplify(const GroupPresentation& p, const SimplificationCaps& caps) {
  caps.validate();
  return Simplifier(p, caps).run();
}

}  // namespace adorn
