#include "models.hpp"

#include <algorithm>
#include <array>

namespace oracle {

Model quaternion_model() {
  // basis index: 0=1, 1=i, 2=j, 3=k; element (sign, basis) stored as
  // 4 * (sign < 0) + basis
  static const int table[4][4][2] = {
      // {sign, basis} of x * y for x, y in {1, i, j, k}
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
  };
  auto right_mult = [&](int y) {
    Perm p(8);
    for (int x = 0; x < 8; ++x) {
      const int xs = x < 4 ? 1 : -1, xb = x % 4;
      const int s = xs * table[xb][y][0], b = table[xb][y][1];
      p[x] = static_cast<std::uint8_t>((s < 0 ? 4 : 0) + b);
    }
    return p;
  };
  return {{right_mult(1), right_mult(2)}, 8};
}

Model disjoint_product(const Model& a, const Model& b) {
  Model out;
  out.degree = a.degree + b.degree;
  for (const Perm& g : a.gens) {
    Perm p = identity(out.degree);
    std::copy(g.begin(), g.end(), p.begin());
    out.gens.push_back(p);
  }
  for (const Perm& g : b.gens) {
    Perm p = identity(out.degree);
    for (std::size_t i = 0; i < b.degree; ++i) p[a.degree + i] = static_cast<std::uint8_t>(a.degree + g[i]);
    out.gens.push_back(p);
  }
  return out;
}

bool satisfies(const Model& m, const adorn::GroupPresentation& p) {
  const Perm id = identity(m.degree);
  for (const adorn::Word& r : p.relators())
    if (image(m.gens, r, m.degree) != id) return false;
  return true;
}

std::optional<Model> search_model(const adorn::GroupPresentation& p, std::size_t degree, std::size_t order) {
  std::vector<Perm> all;
  Perm q = identity(degree);
  do all.push_back(q);
  while (std::next_permutation(q.begin(), q.end()));

  const std::size_t n = p.n_generators();
  std::vector<std::vector<const adorn::Word*>> check_at(n);
  for (const adorn::Word& r : p.relators()) {
    std::size_t top = 0;
    for (adorn::Letter l : r) top = std::max(top, l.gen());
    check_at[top].push_back(&r);
  }
  Model m{std::vector<Perm>(n), degree};
  const Perm id = identity(degree);
  auto rec = [&](auto&& self, std::size_t g) -> bool {
    if (g == n) return closure(m.gens, degree).size() == order;
    for (const Perm& c : all) {
      m.gens[g] = c;
      bool ok = true;
      for (const adorn::Word* r : check_at[g]) ok = ok && image(m.gens, *r, degree) == id;
      if (ok && self(self, g + 1)) return true;
    }
    return false;
  };
  if (n > 0 && rec(rec, 0)) return m;
  return std::nullopt;
}

}  // namespace oracle
