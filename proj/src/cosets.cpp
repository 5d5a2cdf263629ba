#include "adorn/cosets.hpp"

#include <deque>

#include "adorn/abelian.hpp"
#include "adorn/errors.hpp"
#include "adorn/kernels.hpp"

namespace adorn {

CosetTable::CosetTable(std::size_t n_generators, std::size_t n_cosets, std::vector<Coset> action)
    : n_generators_(n_generators), n_cosets_(n_cosets), action_(std::move(action)) {
  if (action_.size() != n_cosets_ * n_columns())
    throw InvalidArgument("coset table size mismatch");
  complete_ = true;
  for (Coset c : action_) {
    if (c == kUndefined) {
      complete_ = false;
    } else if (c < 0 || static_cast<std::size_t>(c) >= n_cosets_) {
      throw InvalidArgument("coset table entry out of range");
    }
  }
}

CosetTable::Coset CosetTable::trace(Coset c, const Word& w) const {
  for (Letter l : w) {
    if (c == kUndefined) return c;
    c = act(c, l);
  }
  return c;
}

CosetTable CosetTable::standardized() const {
  if (!complete_) throw IncompleteTable("cannot standardize an incomplete coset table");
  const std::size_t cols = n_columns();
  std::vector<Coset> new_of(n_cosets_, kUndefined), old_of;
  old_of.reserve(n_cosets_);
  if (n_cosets_ > 0) {
    new_of[0] = 0;
    old_of.push_back(0);
  }
  for (std::size_t k = 0; k < old_of.size(); ++k)
    for (std::size_t x = 0; x < cols; ++x) {
      const Coset d = action_[old_of[k] * cols + x];
      if (new_of[d] == kUndefined) {
        new_of[d] = static_cast<Coset>(old_of.size());
        old_of.push_back(d);
      }
    }
  if (old_of.size() != n_cosets_) throw InvalidArgument("coset table is not transitive");
  std::vector<Coset> action(action_.size());
  for (std::size_t k = 0; k < n_cosets_; ++k)
    for (std::size_t x = 0; x < cols; ++x) action[k * cols + x] = new_of[action_[old_of[k] * cols + x]];
  return CosetTable(n_generators_, n_cosets_, std::move(action));
}

void EnumerationCaps::validate() const {
  if (max_cosets == 0 || max_deductions == 0)
    throw InvalidArgument("enumeration caps must be strictly positive");
}

namespace {

using Coset = CosetTable::Coset;
constexpr Coset kUndef = CosetTable::kUndefined;

// Coset enumeration over a flat table with union-find coincidence handling.
class Enumerator {
 public:
  Enumerator(const GroupPresentation& p, const EnumerationCaps& caps)
      : cols_(2 * p.n_generators()), caps_(caps), conjugates_(cols_) {
    for (const Word& r : p.relators()) {
      relators_.push_back(columns_of(r));
      for (std::size_t i = 0; i < r.size(); ++i) conjugates_[r[i].column()].push_back(columns_of(r.rotated(i)));
      const Word inv = r.inverse();
      for (std::size_t i = 0; i < inv.size(); ++i)
        conjugates_[inv[i].column()].push_back(columns_of(inv.rotated(i)));
    }
    new_coset();
  }

  CosetTable run(const std::vector<Word>& subgroup_generators) {
    for (const Word& w : subgroup_generators) {
      subgroup_.push_back(columns_of(free_reduce(w)));
      scan_and_fill(0, subgroup_.back());
    }
    process_deductions();

    for (Coset a = 0; a < static_cast<Coset>(n_defined()); ++a) {
      for (std::size_t x = 0; x < cols_ && alive(a); ++x) {
        if (entry(a, x) != kUndef) continue;
        define(a, x);
        process_deductions();
      }
    }

    // Closing sweep: make sure every relator and subgroup generator holds.
    bool dirty = true;
    while (dirty) {
      const std::size_t before = n_defined() + deductions_done_ + merges_;
      for (const auto& s : subgroup_) scan_and_fill(0, s);
      for (Coset a = 0; a < static_cast<Coset>(n_defined()); ++a)
        for (const auto& r : relators_) {
          if (!alive(a)) break;
          scan_and_fill(a, r);
        }
      process_deductions();
      for (Coset a = 0; a < static_cast<Coset>(n_defined()); ++a)
        for (std::size_t x = 0; x < cols_ && alive(a); ++x)
          if (entry(a, x) == kUndef) {
            define(a, x);
            process_deductions();
          }
      dirty = n_defined() + deductions_done_ + merges_ != before;
    }
    return compact();
  }

 private:
  std::vector<std::size_t> columns_of(const Word& w) const {
    std::vector<std::size_t> out;
    out.reserve(w.size());
    for (Letter l : w) out.push_back(l.column());
    return out;
  }

  std::size_t n_defined() const { return parent_.size(); }
  bool alive(Coset c) const { return parent_[c] == c; }
  Coset& entry(Coset c, std::size_t x) { return table_[c * cols_ + x]; }

  Coset new_coset() {
    if (parent_.size() >= caps_.max_cosets)
      throw CapExceeded("coset enumeration exceeded " + std::to_string(caps_.max_cosets) + " cosets");
    const Coset c = static_cast<Coset>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, kUndef);
    return c;
  }

  void define(Coset c, std::size_t x) {
    const Coset d = new_coset();
    entry(c, x) = d;
    entry(d, x ^ 1) = c;
    deductions_.emplace_back(c, x);
  }

  void set_pair(Coset f, std::size_t x, Coset b) {
    entry(f, x) = b;
    entry(b, x ^ 1) = f;
    deductions_.emplace_back(f, x);
  }

  // Traces w from c forwards and backwards; closes a single gap with a
  // deduction, records a coincidence when both ends meet, and (when
  // `fill`) defines new cosets for larger gaps.
  void scan_impl(Coset c, const std::vector<std::size_t>& w, bool fill) {
    if (w.empty()) return;
    Coset f = c, b = c;
    std::size_t i = 0, j = w.size();  // unscanned letters are w[i..j)
    while (true) {
      while (i < j && entry(f, w[i]) != kUndef) f = entry(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && entry(b, w[j - 1] ^ 1) != kUndef) b = entry(b, w[--j] ^ 1);
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        set_pair(f, w[i], b);
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  void scan(Coset c, const std::vector<std::size_t>& w) { scan_impl(c, w, false); }
  void scan_and_fill(Coset c, const std::vector<std::size_t>& w) { scan_impl(c, w, true); }

  void process_deductions() {
    while (!deductions_.empty()) {
      if (++deductions_done_ > caps_.max_deductions)
        throw CapExceeded("coset enumeration exceeded " + std::to_string(caps_.max_deductions) +
                          " deductions");
      const auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(c)) continue;
      for (const auto& w : conjugates_[x]) {
        if (!alive(c)) break;
        scan(c, w);
      }
      if (!alive(c)) continue;
      const Coset d = entry(c, x);
      if (d == kUndef) continue;
      for (const auto& w : conjugates_[x ^ 1]) {
        if (!alive(d)) break;
        scan(d, w);
      }
    }
  }

  Coset rep(Coset c) {
    Coset r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const Coset next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(Coset a, Coset b, std::deque<Coset>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
    ++merges_;
  }

  void coincidence(Coset a, Coset b) {
    std::deque<Coset> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const Coset g = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < cols_; ++x) {
        const Coset d = entry(g, x);
        if (d == kUndef) continue;
        if (entry(d, x ^ 1) == g) entry(d, x ^ 1) = kUndef;
        const Coset mu = rep(g), nu = rep(d);
        if (entry(mu, x) != kUndef) {
          merge(nu, entry(mu, x), queue);
        } else if (entry(nu, x ^ 1) != kUndef) {
          merge(mu, entry(nu, x ^ 1), queue);
        } else {
          set_pair(mu, x, nu);
        }
      }
    }
  }

  CosetTable compact() {
    std::vector<Coset> index(n_defined(), kUndef);
    std::size_t live = 0;
    for (std::size_t c = 0; c < n_defined(); ++c)
      if (alive(static_cast<Coset>(c))) index[c] = static_cast<Coset>(live++);
    std::vector<Coset> action(live * cols_, kUndef);
    for (std::size_t c = 0; c < n_defined(); ++c) {
      if (index[c] == kUndef) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        const Coset d = table_[c * cols_ + x];
        action[index[c] * cols_ + x] = d == kUndef ? kUndef : index[rep(d)];
      }
    }
    CosetTable t(cols_ / 2, live, std::move(action));
    if (!t.complete()) throw CapExceeded("coset enumeration did not close");
    return t.standardized();
  }

  std::size_t cols_;
  EnumerationCaps caps_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::vector<std::vector<std::size_t>>> conjugates_;  // by first column
  std::vector<std::vector<std::size_t>> subgroup_;
  std::vector<Coset> table_;
  std::vector<Coset> parent_;
  std::vector<std::pair<Coset, std::size_t>> deductions_;
  std::size_t deductions_done_ = 0;
  std::size_t merges_ = 0;
};

}  // namespace

CosetTable todd_coxeter(const GroupPresentation& p, const std::vector<Word>& subgroup_generators,
                        const EnumerationCaps& caps) {
  caps.validate();
  for (const Word& w : subgroup_generators)
    if (w.arity() > p.n_generators())
      throw InvalidArgument("subgroup generator uses a generator out of range");
  return Enumerator(p, caps).run(subgroup_generators);
}

CosetTable commutator_coset_table(const GroupPresentation& p, const EnumerationCaps& caps) {
  caps.validate();
  const AbelianQuotient q(p);
  const AbelianInvariants& inv = q.invariants();
  if (!inv.is_finite())
    throw InfiniteIndex("abelianization " + to_string(inv) + " is infinite");
  if (inv.order() > caps.max_cosets)
    throw CapExceeded("abelianization order " + inv.order().get_str() + " exceeds coset cap");

  const std::size_t n = inv.order().get_ui();
  const std::size_t k = inv.torsion.size();
  std::vector<std::size_t> radix(k);
  for (std::size_t i = 0; i < k; ++i) radix[i] = inv.torsion[i].get_ui();

  // coset index = c_0 + t_0 * (c_1 + t_1 * (...))
  auto encode = [&](const std::vector<std::size_t>& digits) {
    std::size_t idx = 0;
    for (std::size_t i = k; i-- > 0;) idx = idx * radix[i] + digits[i];
    return idx;
  };

  const std::size_t gens = p.n_generators(), cols = 2 * gens;
  std::vector<Coset> action(n * cols);
  std::vector<std::size_t> digits(k), moved(k);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t rest = c;
    for (std::size_t i = 0; i < k; ++i) {
      digits[i] = rest % radix[i];
      rest /= radix[i];
    }
    for (std::size_t g = 0; g < gens; ++g) {
      const auto& img = q.image(g);
      for (int sign : {1, -1}) {
        for (std::size_t i = 0; i < k; ++i) {
          const std::size_t shift = img[i].get_ui() % radix[i];
          moved[i] = sign > 0 ? (digits[i] + shift) % radix[i]
                              : (digits[i] + radix[i] - shift) % radix[i];
        }
        action[c * cols + Letter(g, sign).column()] = static_cast<Coset>(encode(moved));
      }
    }
  }
  return CosetTable(gens, n, std::move(action));
}

bool is_valid_complete_table(const CosetTable& t, const GroupPresentation& p,
                             const std::vector<Word>& subgroup_generators) {
  if (!t.complete() || t.n_generators() != p.n_generators() || t.n_cosets() == 0) return false;
  for (std::size_t c = 0; c < t.n_cosets(); ++c)
    for (std::size_t x = 0; x < t.n_columns(); ++x) {
      const auto l = Letter::from_column(x);
      if (t.act(t.act(static_cast<Coset>(c), l), l.inverse()) != static_cast<Coset>(c)) return false;
    }
  try {
    (void)t.standardized();
  } catch (const Error&) {
    return false;
  }
  for (const Word& w : subgroup_generators)
    if (t.trace(0, w) != 0) return false;
  return kernels::relators_close_parallel(t, p.relators());
}

}  // namespace adorn
