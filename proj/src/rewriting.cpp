#include "adorn/rewriting.hpp"

#include "adorn/errors.hpp"
#include "adorn/kernels.hpp"

namespace adorn {

namespace {

struct TreeEdge {
  CosetTable::Coset parent = CosetTable::kUndefined;
  Letter letter{0, 1};
};

struct BfsTree {
  std::vector<TreeEdge> edges;
  std::vector<CosetTable::Coset> order;  // discovery order, parents first
};

BfsTree bfs_tree(const CosetTable& t) {
  if (!t.complete()) throw IncompleteTable("coset table is incomplete");
  BfsTree tree{std::vector<TreeEdge>(t.n_cosets()), {0}};
  std::vector<bool> seen(t.n_cosets(), false);
  seen[0] = true;
  for (std::size_t k = 0; k < tree.order.size(); ++k)
    for (std::size_t x = 0; x < t.n_columns(); ++x) {
      const Letter l = Letter::from_column(x);
      const auto d = t.act(tree.order[k], l);
      if (seen[d]) continue;
      seen[d] = true;
      tree.edges[d] = {tree.order[k], l};
      tree.order.push_back(d);
    }
  if (tree.order.size() != t.n_cosets()) throw InvalidArgument("coset table is not transitive");
  return tree;
}

}  // namespace

std::vector<Word> schreier_transversal(const CosetTable& t) {
  const auto tree = bfs_tree(t);
  std::vector<Word> reps(t.n_cosets());
  for (std::size_t k = 1; k < tree.order.size(); ++k) {
    const auto c = tree.order[k];
    reps[c] = reps[tree.edges[c].parent];
    reps[c].push_back(tree.edges[c].letter);
  }
  return reps;
}

SchreierSystem::SchreierSystem(const CosetTable& t) : table_(t), transversal_(schreier_transversal(t)) {
  const auto tree = bfs_tree(t).edges;
  const std::size_t gens = t.n_generators();
  index_.assign(t.n_cosets() * gens, 0);
  for (std::size_t c = 1; c < t.n_cosets(); ++c) {
    const TreeEdge& e = tree[c];
    if (e.letter.sign() > 0)
      index_[e.parent * gens + e.letter.gen()] = -1;
    else
      index_[c * gens + e.letter.gen()] = -1;
  }
  for (std::size_t c = 0; c < t.n_cosets(); ++c)
    for (std::size_t g = 0; g < gens; ++g) {
      auto& slot = index_[c * gens + g];
      if (slot < 0) continue;
      slot = static_cast<std::int32_t>(words_.size());
      const auto d = t.act(static_cast<CosetTable::Coset>(c), Letter(g, 1));
      Word w = transversal_[c];
      w.push_back(Letter(g, 1));
      w.append(transversal_[d].inverse());
      words_.push_back(free_reduce(w));
    }
}

Word SchreierSystem::rewrite(const Word& w) const {
  if (table_.trace(0, w) != 0) throw InvalidArgument("word does not lie in the subgroup");
  return kernels::rewrite_word(table_, index_, 0, w);
}

GroupPresentation reidemeister_schreier_raw(const GroupPresentation& p, const SchreierSystem& s) {
  if (s.table().n_generators() != p.n_generators())
    throw InvalidArgument("coset table does not match the presentation");
  auto relators = kernels::rewrite_relators_parallel(s.table(), s.index(), p.relators());
  return GroupPresentation::with_fresh_names(p.name().empty() ? "" : p.name() + "'",
                                             s.n_schreier_generators(), std::move(relators));
}

RewriteResult reidemeister_schreier(const GroupPresentation& p, const CosetTable& t,
                                    const SimplificationCaps& caps) {
  const SchreierSystem s(t);
  const GroupPresentation raw = reidemeister_schreier_raw(p, s);
  SimplifyResult simplified = tietze_simplify(raw, caps);
  const auto& q = simplified.presentation;
  return {GroupPresentation::with_fresh_names(raw.name(), q.n_generators(), q.relators()), raw.stats(),
          simplified.partially_simplified};
}

}  // namespace adorn
