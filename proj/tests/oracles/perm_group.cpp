#include "perm_group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

Perm identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

Perm inverse(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<std::uint8_t>(i);
  return out;
}

Perm image(const std::vector<Perm>& gens, const adorn::Word& w, std::size_t degree) {
  Perm out = identity(degree);
  for (adorn::Letter l : w) out = compose(out, l.sign() > 0 ? gens[l.gen()] : inverse(gens[l.gen()]));
  return out;
}

std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t degree, std::size_t limit) {
  std::set<Perm> seen{identity(degree)};
  std::deque<Perm> queue{identity(degree)};
  while (!queue.empty()) {
    const Perm x = queue.front();
    queue.pop_front();
    for (const Perm& g : gens) {
      Perm y = compose(x, g);
      if (seen.insert(y).second) {
        if (seen.size() > limit) throw std::runtime_error("permutation group too large");
        queue.push_back(std::move(y));
      }
    }
  }
  return seen;
}

namespace {

// Drops generators already in the span of earlier ones; keeps commutator
// lists from squaring at every stage.
std::vector<Perm> prune(const std::vector<Perm>& gens, std::size_t degree) {
  std::vector<Perm> kept;
  std::set<Perm> span{identity(degree)};
  for (const Perm& g : gens)
    if (!span.count(g)) {
      kept.push_back(g);
      span = closure(kept, degree);
    }
  return kept;
}

}  // namespace

Subgroup derived_subgroup(const Subgroup& h, std::size_t degree) {
  Subgroup n;
  for (const Perm& a : h.gens)
    for (const Perm& b : h.gens) n.gens.push_back(compose(compose(a, b), compose(inverse(a), inverse(b))));
  n.elements = closure(n.gens, degree);
  // normal closure under conjugation by generators of h
  for (bool grew = true; grew;) {
    grew = false;
    for (const Perm& g : h.gens) {
      const std::vector<Perm> current = n.gens;
      for (const Perm& s : current) {
        Perm c = compose(compose(inverse(g), s), g);
        if (!n.elements.count(c)) {
          n.gens.push_back(c);
          n.elements = closure(n.gens, degree);
          grew = true;
        }
      }
    }
  }
  n.gens = prune(n.gens, degree);
  return n;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::vector<std::uint64_t> abelian_quotient_invariants(const Subgroup& h, const Subgroup& n) {
  const std::size_t index = h.elements.size() / n.elements.size();
  if (index == 1) return {};
  const std::size_t degree = h.elements.begin()->size();
  // order of each coset xN; every element of a coset has the same coset order
  std::map<std::uint64_t, std::size_t> order_count;
  for (const Perm& x : h.elements) {
    Perm y = x;
    std::uint64_t k = 1;
    while (!n.elements.count(y)) {
      y = compose(y, x);
      ++k;
    }
    ++order_count[k];
  }
  for (auto& [k, c] : order_count) c /= n.elements.size();
  (void)degree;

  std::vector<std::uint64_t> factors;  // prime powers
  for (std::uint64_t p : prime_factors(index)) {
    // count elements of order dividing p^j, j = 0, 1, ...
    std::vector<std::size_t> count{1};
    for (std::uint64_t q = p;; q *= p) {
      std::size_t c = 0;
      for (auto [k, m] : order_count)
        if (q % k == 0) c += m;
      count.push_back(c);
      if (c == count[count.size() - 2]) break;
    }
    // |A[p^j]| / |A[p^(j-1)]| = p^(number of cyclic factors of exponent >= j)
    std::vector<std::size_t> at_least;
    for (std::size_t j = 1; j + 1 < count.size(); ++j) {
      std::size_t ratio = count[j] / count[j - 1], e = 0;
      while (ratio > 1) {
        ratio /= p;
        ++e;
      }
      at_least.push_back(e);
    }
    for (std::size_t j = 0; j < at_least.size(); ++j) {
      const std::size_t next = j + 1 < at_least.size() ? at_least[j + 1] : 0;
      std::uint64_t pe = 1;
      for (std::size_t i = 0; i <= j; ++i) pe *= p;
      for (std::size_t i = 0; i < at_least[j] - next; ++i) factors.push_back(pe);
    }
  }
  // combine prime powers into invariant factors
  std::map<std::uint64_t, std::vector<std::uint64_t>> by_prime;
  for (std::uint64_t f : factors) by_prime[prime_factors(f)[0]].push_back(f);
  std::size_t len = 0;
  for (auto& [p, v] : by_prime) {
    std::sort(v.begin(), v.end(), std::greater<>());
    len = std::max(len, v.size());
  }
  std::vector<std::uint64_t> inv(len, 1);
  for (auto& [p, v] : by_prime)
    for (std::size_t i = 0; i < v.size(); ++i) inv[len - 1 - i] *= v[i];
  return inv;
}

std::vector<SeriesStage> derived_series(const std::vector<Perm>& gens, std::size_t degree) {
  std::vector<SeriesStage> out;
  Subgroup g{gens, closure(gens, degree)};
  for (;;) {
    Subgroup d = derived_subgroup(g, degree);
    out.push_back({g.elements.size(), abelian_quotient_invariants(g, d)});
    if (d.elements.size() == g.elements.size()) return out;
    g = std::move(d);
  }
}

std::size_t doa(const std::vector<Perm>& gens, std::size_t degree) {
  return derived_series(gens, degree).size() - 1;
}

}  // namespace oracle
