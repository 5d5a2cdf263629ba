#include "adorn/zoo.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "adorn/abelian.hpp"
#include "adorn/errors.hpp"
#include "adorn/parse.hpp"

namespace adorn {

const std::vector<ZooFamily>& zoo_families() {
  static const std::vector<ZooFamily> families = {
      {"free", "n", "free group on x1..xn"},
      {"cyclic", "n", "Z/n (n = 0 gives Z)"},
      {"dihedral_inf", "", "Z/2 * Z/2"},
      {"free_product", "p,q", "Z/p * Z/q (0 means Z)"},
      {"direct_product", "p,q", "Z/p x Z/q (0 means Z)"},
      {"braid", "n", "Artin braid group on n strands"},
      {"torus_knot", "p,q", "<x,y | x^p y^-q>, gcd(p,q) = 1"},
      {"sl2z", "", "SL(2,Z) = <a,b | a^4, a^2 b^-3>"},
      {"triangle", "p,q,r", "<a,b | a^p, b^q, (ab)^r>"},
      {"surface", "g", "closed orientable surface of genus g"},
      {"klein_bottle", "", "<a,b | a b a^-1 b>"},
      {"fuchsian", "g,p1,...,pn", "orbifold group of genus g with cone points p1..pn"},
      {"baumslag_solitar", "m,n", "<a,b | b a^m b^-1 a^-n>"},
      {"trefoil", "", "<a,b | aba = bab>"},
      {"figure_eight", "", "figure-eight knot group, two generators"},
      {"sl3z", "", "Steinberg presentation of SL(3,Z)"},
      {"congruence_kernel", "n,p",
       "kernel of SL(n,Z) -> SL(n,Z/p) (Z/4 for p = 2); listed only, no presentation is built"},
  };
  return families;
}

std::vector<long> parse_params(const std::string& csv) {
  std::vector<long> out;
  if (csv.find_first_not_of(" \t") == std::string::npos) return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("bad parameter \"" + item + "\"");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw InvalidArgument("bad parameter \"" + item + "\"");
    out.push_back(v);
  }
  return out;
}

namespace {

std::string power(const std::string& x, long e) {
  return e == 1 ? x : x + "^" + std::to_string(e);
}

std::string comm(const std::string& x, const std::string& y) {
  return x + " " + y + " " + x + "^-1 " + y + "^-1";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

GroupPresentation build(const std::string& name, const std::vector<std::string>& gens,
                        const std::vector<std::string>& rels) {
  return parse_presentation("<" + join(gens, ", ") + " | " + join(rels, ", ") + ">", name);
}

void expect_count(const std::string& family, const std::vector<long>& params, std::size_t n) {
  if (params.size() != n)
    throw InvalidArgument(family + " takes " + std::to_string(n) + " parameter(s), got " +
                          std::to_string(params.size()));
}

void expect_at_least(const std::string& family, long v, long lo) {
  if (v < lo) throw InvalidArgument(family + ": parameter " + std::to_string(v) + " must be >= " + std::to_string(lo));
}

std::string label(const std::string& family, const std::vector<long>& params) {
  if (params.empty()) return family;
  std::string s = family + "(";
  for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
  return s + ")";
}

// relators for a cyclic factor of order n on generator x; n = 0 is Z
void cyclic_relator(std::vector<std::string>& rels, const std::string& x, long n) {
  if (n != 0) rels.push_back(power(x, n));
}

GroupPresentation make_fuchsian(const std::string& name, long genus, const std::vector<long>& cones) {
  std::vector<std::string> gens, rels;
  std::string longrel;
  for (long j = 1; j <= genus; ++j) {
    const std::string a = "a" + std::to_string(j), b = "b" + std::to_string(j);
    gens.push_back(a);
    gens.push_back(b);
    longrel += (longrel.empty() ? "" : " ") + comm(a, b);
  }
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const std::string x = "x" + std::to_string(i + 1);
    gens.push_back(x);
    rels.push_back(power(x, cones[i]));
    longrel += (longrel.empty() ? "" : " ") + x;
  }
  if (!longrel.empty()) rels.push_back(longrel);
  return build(name, gens, rels);
}

}  // namespace

GroupPresentation make(const std::string& family, const std::vector<long>& params) {
  const std::string name = label(family, params);
  if (family == "free") {
    expect_count(family, params, 1);
    expect_at_least(family, params[0], 0);
    std::vector<std::string> gens;
    for (long i = 1; i <= params[0]; ++i) gens.push_back("x" + std::to_string(i));
    return build(name, gens, {});
  }
  if (family == "cyclic") {
    expect_count(family, params, 1);
    expect_at_least(family, params[0], 0);
    std::vector<std::string> rels;
    cyclic_relator(rels, "a", params[0]);
    return build(name, {"a"}, rels);
  }
  if (family == "dihedral_inf") {
    expect_count(family, params, 0);
    return build(name, {"a", "b"}, {"a^2", "b^2"});
  }
  if (family == "free_product" || family == "direct_product") {
    expect_count(family, params, 2);
    expect_at_least(family, params[0], 0);
    expect_at_least(family, params[1], 0);
    std::vector<std::string> rels;
    cyclic_relator(rels, "a", params[0]);
    cyclic_relator(rels, "b", params[1]);
    if (family == "direct_product") rels.push_back(comm("a", "b"));
    return build(name, {"a", "b"}, rels);
  }
  if (family == "braid") {
    expect_count(family, params, 1);
    expect_at_least(family, params[0], 1);
    const long n = params[0];
    std::vector<std::string> gens, rels;
    for (long i = 1; i < n; ++i) gens.push_back("s" + std::to_string(i));
    for (long i = 1; i + 1 < n; ++i) {
      const std::string a = gens[i - 1], b = gens[i];
      rels.push_back(a + " " + b + " " + a + " " + b + "^-1 " + a + "^-1 " + b + "^-1");
    }
    for (long i = 1; i < n; ++i)
      for (long j = i + 2; j < n; ++j) rels.push_back(comm(gens[i - 1], gens[j - 1]));
    return build(name, gens, rels);
  }
  if (family == "torus_knot") {
    expect_count(family, params, 2);
    expect_at_least(family, params[0], 1);
    expect_at_least(family, params[1], 1);
    if (std::gcd(params[0], params[1]) != 1) throw InvalidArgument("torus_knot: p and q must be coprime");
    return build(name, {"x", "y"}, {power("x", params[0]) + " y^-" + std::to_string(params[1])});
  }
  if (family == "sl2z") {
    expect_count(family, params, 0);
    return build(name, {"a", "b"}, {"a^4", "a^2 b^-3"});
  }
  if (family == "triangle") {
    expect_count(family, params, 3);
    for (long v : params) expect_at_least(family, v, 1);
    return build(name, {"a", "b"},
                 {power("a", params[0]), power("b", params[1]), power("(a b)", params[2])});
  }
  if (family == "surface") {
    expect_count(family, params, 1);
    expect_at_least(family, params[0], 0);
    return make_fuchsian(name, params[0], {});
  }
  if (family == "klein_bottle") {
    expect_count(family, params, 0);
    return build(name, {"a", "b"}, {"a b a^-1 b"});
  }
  if (family == "fuchsian") {
    if (params.empty()) throw InvalidArgument("fuchsian takes the genus followed by cone indices");
    expect_at_least(family, params[0], 0);
    const std::vector<long> cones(params.begin() + 1, params.end());
    for (long p : cones) expect_at_least("fuchsian cone index", p, 2);
    return make_fuchsian(name, params[0], cones);
  }
  if (family == "baumslag_solitar") {
    expect_count(family, params, 2);
    if (params[0] == 0 || params[1] == 0) throw InvalidArgument("baumslag_solitar: m and n must be non-zero");
    return build(name, {"a", "b"}, {"b " + power("a", params[0]) + " b^-1 " + power("a", -params[1])});
  }
  if (family == "trefoil") {
    expect_count(family, params, 0);
    return build(name, {"a", "b"}, {"a b a b^-1 a^-1 b^-1"});
  }
  if (family == "figure_eight") {
    expect_count(family, params, 0);
    // w x w^-1 = y with w = x^-1 y x y^-1
    return build(name, {"x", "y"}, {"x^-1 y x y^-1 x y x^-1 y^-1 x y^-1"});
  }
  if (family == "sl3z") {
    expect_count(family, params, 0);
    std::vector<std::pair<int, int>> idx;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        if (i != j) idx.push_back({i, j});
    auto x = [](int i, int j) { return "x" + std::to_string(i) + std::to_string(j); };
    std::vector<std::string> gens, rels;
    for (auto [i, j] : idx) gens.push_back(x(i, j));
    for (auto [i, j] : idx)
      for (auto [k, l] : idx) {
        if (j == k && i != l) rels.push_back(comm(x(i, j), x(j, l)) + " " + x(i, l) + "^-1");
        // unordered pairs once
        if ((i < k || (i == k && j < l)) && j != k && i != l) rels.push_back(comm(x(i, j), x(k, l)));
      }
    rels.push_back("(x12 x21^-1 x12)^4");
    return build(name, gens, rels);
  }
  if (family == "congruence_kernel")
    throw InvalidArgument("congruence_kernel is listed for reference only; it is not adorable, but its "
                          "derived quotients are finite and no presentation is built here");
  throw InvalidArgument("unknown zoo family \"" + family + "\"");
}

GroupPresentation free_product(const GroupPresentation& a, const GroupPresentation& b) {
  std::vector<std::string> names = a.generator_names();
  std::set<std::string> taken(names.begin(), names.end());
  const std::set<std::string> b_names(b.generator_names().begin(), b.generator_names().end());
  for (const std::string& n : b.generator_names()) {
    std::string fresh = n;
    for (int k = 2; taken.count(fresh) || (fresh != n && b_names.count(fresh)); ++k)
      fresh = n + "_" + std::to_string(k);
    taken.insert(fresh);
    names.push_back(fresh);
  }
  const std::size_t shift = a.n_generators();
  std::vector<Word> rels = a.relators();
  for (const Word& r : b.relators()) {
    Word w;
    for (Letter l : r) w.push_back(Letter(l.gen() + shift, l.sign()));
    rels.push_back(w);
  }
  return GroupPresentation(a.name() + " * " + b.name(), std::move(names), std::move(rels));
}

GroupPresentation direct_product(const GroupPresentation& a, const GroupPresentation& b) {
  const GroupPresentation fp = free_product(a, b);
  std::vector<Word> rels = fp.relators();
  for (std::size_t i = 0; i < a.n_generators(); ++i)
    for (std::size_t j = 0; j < b.n_generators(); ++j)
      rels.push_back(commutator(Word::power(i, 1), Word::power(a.n_generators() + j, 1)));
  return GroupPresentation(a.name() + " x " + b.name(), fp.generator_names(), std::move(rels));
}

namespace {

using Perm = std::vector<std::size_t>;

std::size_t perm_order(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t order = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

// One representative per cycle type: cycles on consecutive blocks.
std::vector<Perm> cycle_type_representatives(std::size_t k) {
  std::vector<Perm> out;
  std::vector<std::size_t> parts;
  auto rec = [&](auto&& self, std::size_t remaining, std::size_t max_part) -> void {
    if (remaining == 0) {
      Perm p(k);
      std::size_t s = 0;
      for (std::size_t len : parts) {
        for (std::size_t i = 0; i < len; ++i) p[s + i] = s + (i + 1) % len;
        s += len;
      }
      out.push_back(p);
      return;
    }
    for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
      parts.push_back(part);
      self(self, remaining - part, part);
      parts.pop_back();
    }
  };
  rec(rec, k, k);
  return out;
}

}  // namespace

std::optional<std::vector<std::vector<std::size_t>>> find_permutation_representation(
    const GroupPresentation& p, std::size_t k, std::size_t budget) {
  const std::size_t n = p.n_generators();
  if (n == 0 || k < 2) return std::nullopt;

  // bound generator orders by pure power relators
  std::vector<long> order_bound(n, 0);
  for (const Word& r : p.relators()) {
    const std::size_t g = r.front().gen();
    if (std::all_of(r.begin(), r.end(), [&](Letter l) { return l == r.front(); }))
      order_bound[g] = order_bound[g] == 0 ? static_cast<long>(r.size())
                                           : std::gcd(order_bound[g], static_cast<long>(r.size()));
  }

  std::vector<Perm> all;
  Perm id(k);
  std::iota(id.begin(), id.end(), 0);
  Perm q = id;
  do all.push_back(q);
  while (std::next_permutation(q.begin(), q.end()));

  std::vector<std::vector<Perm>> candidates(n);
  for (std::size_t g = 0; g < n; ++g) {
    const std::vector<Perm>& pool = g == 0 ? cycle_type_representatives(k) : all;
    for (const Perm& c : pool)
      if (order_bound[g] == 0 || order_bound[g] % static_cast<long>(perm_order(c)) == 0)
        candidates[g].push_back(c);
  }

  // relators checked as soon as their largest generator is assigned
  std::vector<std::vector<const Word*>> check_at(n);
  for (const Word& r : p.relators()) {
    std::size_t top = 0;
    for (Letter l : r) top = std::max(top, l.gen());
    check_at[top].push_back(&r);
  }

  std::vector<Perm> images(n), inverses(n);
  std::size_t spent = 0;
  bool exhausted = false;
  auto holds = [&](const Word& r) {
    for (std::size_t pt = 0; pt < k; ++pt) {
      std::size_t x = pt;
      for (Letter l : r) x = l.sign() > 0 ? images[l.gen()][x] : inverses[l.gen()][x];
      if (x != pt) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t g, bool nontrivial) -> bool {
    if (g == n) return nontrivial;
    for (const Perm& c : candidates[g]) {
      if (++spent > budget) {
        exhausted = true;
        return false;
      }
      images[g] = c;
      for (std::size_t i = 0; i < k; ++i) inverses[g][c[i]] = i;
      if (!std::all_of(check_at[g].begin(), check_at[g].end(), [&](const Word* r) { return holds(*r); }))
        continue;
      if (self(self, g + 1, nontrivial || !is_identity(c))) return true;
      if (exhausted) return false;
    }
    return false;
  };
  for (auto& inv : inverses) inv.assign(k, 0);
  if (rec(rec, 0, false)) return images;
  return std::nullopt;
}

std::optional<NontrivialityCertificate> certify_nontrivial(const GroupPresentation& p,
                                                           const EnumerationCaps& caps,
                                                           std::size_t max_degree) {
  const AbelianInvariants ab = abelianization(p);
  if (!ab.is_trivial()) return NontrivialityCertificate{"abelianization", to_string(ab)};
  try {
    const CosetTable t = todd_coxeter(p, {}, caps);
    if (t.n_cosets() > 1) return NontrivialityCertificate{"enumeration", "order " + std::to_string(t.n_cosets())};
    return std::nullopt;  // the group is trivial
  } catch (const CapExceeded&) {
  }
  for (std::size_t k = 2; k <= max_degree; ++k)
    if (find_permutation_representation(p, k))
      return NontrivialityCertificate{"permutation", "non-trivial action on " + std::to_string(k) + " points"};
  return std::nullopt;
}

std::string to_string(FreeProductKind k) {
  switch (k) {
    case FreeProductKind::PerfectProduct: return "PerfectProduct";
    case FreeProductKind::Dinfty: return "Dinfty";
    case FreeProductKind::NonAdorable: return "NonAdorable";
  }
  return "?";
}

namespace {

bool has_order_two(const GroupPresentation& p, const EnumerationCaps& caps) {
  const AbelianInvariants ab = abelianization(p);
  if (!ab.is_finite() || ab.order() != 2) return false;
  try {
    return todd_coxeter(p, {}, caps).n_cosets() == 2;
  } catch (const CapExceeded&) {
    return false;
  }
}

}  // namespace

FreeProductVerdict free_product_verdict(const GroupPresentation& a, const GroupPresentation& b,
                                        const EnumerationCaps& caps) {
  FreeProductVerdict v;
  const GroupPresentation* factors[2] = {&a, &b};
  for (int i = 0; i < 2; ++i) {
    auto cert = certify_nontrivial(*factors[i], caps);
    if (!cert)
      throw CannotCertifyFactorTriviality("cannot certify that factor " + std::to_string(i + 1) + " (" +
                                          factors[i]->name() + ") is non-trivial");
    v.certificates[i] = *cert;
  }
  if (is_perfect(a) && is_perfect(b)) {
    v.kind = FreeProductKind::PerfectProduct;
    v.doa = 0;
    v.note = "free product of perfect groups is perfect";
  } else if (has_order_two(a, caps) && has_order_two(b, caps)) {
    v.kind = FreeProductKind::Dinfty;
    v.doa = 2;
    v.note = "Z/2 * Z/2 is infinite dihedral: D > Z > 1";
  } else {
    v.kind = FreeProductKind::NonAdorable;
    v.note = "not adorable: every quotient G^i/G^(i+1), i >= 1, has rank >= 2";
  }
  return v;
}

std::string to_string(SplittingBranch b) {
  switch (b) {
    case SplittingBranch::AdorableNotSolvable: return "AdorableNotSolvable";
    case SplittingBranch::DerivedStageIsDinfty: return "DerivedStageIsDinfty";
    case SplittingBranch::NonAdorable: return "NonAdorable";
  }
  return "?";
}

std::vector<SplittingOutcome> splitting_verdict(const SplittingDecl& decl) {
  if (!decl.solvability_step) throw UnknownSolvabilityStep("solvability step of the edge group is not known");
  const std::size_t n = *decl.solvability_step;
  const std::string rank_note = "rank of G^i/G^(i+1) >= 2 for i > " + std::to_string(n);
  if (decl.kind == SplittingKind::HNN) return {{SplittingBranch::NonAdorable, std::nullopt, rank_note}};
  return {
      {SplittingBranch::AdorableNotSolvable, n, "G^" + std::to_string(n) + " is perfect and G is not solvable"},
      {SplittingBranch::DerivedStageIsDinfty, n, "G^" + std::to_string(n) + " is infinite dihedral"},
      {SplittingBranch::NonAdorable, std::nullopt, rank_note},
  };
}

}  // namespace adorn
