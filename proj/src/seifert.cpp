#include "adorn/seifert.hpp"

#include <numeric>

#include "adorn/abelian.hpp"
#include "adorn/errors.hpp"
#include "adorn/zoo.hpp"

namespace adorn {

void SeifertData::validate() const {
  if (!orientable_base) throw UnsupportedOrbifold("non-orientable base orbifolds are not supported");
  for (long p : cone_indices)
    if (p < 2) throw InvalidArgument("cone index " + std::to_string(p) + " must be >= 2");
}

std::string to_string(SeifertBranch b) {
  switch (b) {
    case SeifertBranch::FiniteDerived: return "FiniteDerived";
    case SeifertBranch::Solvable: return "Solvable";
    case SeifertBranch::NonAdorable: return "NonAdorable";
    case SeifertBranch::Perfect: return "Perfect";
    case SeifertBranch::ReaderCase: return "ReaderCase";
  }
  return "?";
}

SeifertBranch parse_seifert_branch(const std::string& s) {
  for (SeifertBranch b : {SeifertBranch::FiniteDerived, SeifertBranch::Solvable, SeifertBranch::NonAdorable,
                          SeifertBranch::Perfect, SeifertBranch::ReaderCase})
    if (to_string(b) == s) return b;
  throw InvalidArgument("unknown Seifert branch \"" + s + "\"");
}

GroupPresentation orbifold_presentation(const SeifertData& s) {
  s.validate();
  if (!s.has_boundary) {
    std::vector<long> params{static_cast<long>(s.base_genus)};
    params.insert(params.end(), s.cone_indices.begin(), s.cone_indices.end());
    return make("fuchsian", params);
  }
  std::vector<std::string> names;
  std::vector<Word> rels;
  for (std::size_t j = 1; j <= s.base_genus; ++j) {
    names.push_back("a" + std::to_string(j));
    names.push_back("b" + std::to_string(j));
  }
  for (std::size_t i = 0; i < s.cone_indices.size(); ++i) {
    rels.push_back(Word::power(names.size(), s.cone_indices[i]));
    names.push_back("x" + std::to_string(i + 1));
  }
  return GroupPresentation("orbifold", std::move(names), std::move(rels));
}

namespace {

std::string cone_list(const std::vector<long>& cones) {
  std::string s = "(";
  for (std::size_t i = 0; i < cones.size(); ++i) s += (i ? "," : "") + std::to_string(cones[i]);
  return s + ")";
}

SeifertClassification by_perfectness(const SeifertData& s, SeifertClassification out) {
  const AbelianInvariants ab = abelianization(orbifold_presentation(s));
  out.trace.push_back("orbifold group abelianization: " + to_string(ab));
  if (ab.is_trivial()) {
    out.branch = SeifertBranch::Perfect;
    out.summary = "perfect orbifold group";
  } else {
    out.branch = SeifertBranch::NonAdorable;
    out.summary = "orbifold group splits with non-perfect abelianization";
  }
  return out;
}

SeifertClassification boundary_case(const SeifertData& s, SeifertClassification out) {
  const std::size_t free_factors = 2 * s.base_genus;
  const std::size_t factors = free_factors + s.cone_indices.size();
  out.trace.push_back("boundary: orbifold group is a free product of " + std::to_string(free_factors) +
                      " copies of Z and cyclic groups " + cone_list(s.cone_indices));
  if (factors <= 1) {
    out.branch = SeifertBranch::Solvable;
    out.summary = "orbifold group is cyclic";
    out.trace.push_back("at most one free factor: orbifold group cyclic, fundamental group solvable");
    return out;
  }
  if (factors == 2 && free_factors == 0 && s.cone_indices[0] == 2 && s.cone_indices[1] == 2) {
    out.branch = SeifertBranch::Solvable;
    out.summary = "orbifold group is Z/2 * Z/2";
    out.trace.push_back("free product trichotomy: Z/2 * Z/2 is infinite dihedral, solvable");
    return out;
  }
  out.branch = SeifertBranch::NonAdorable;
  out.summary = "free product other than Z/2 * Z/2";
  out.trace.push_back("free product trichotomy: factors are not perfect and not both Z/2, so not adorable");
  return out;
}

bool pairwise_coprime(const std::vector<long>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (std::gcd(v[i], v[j]) != 1) return false;
  return true;
}

}  // namespace

SeifertClassification classify_seifert(const SeifertData& s) {
  s.validate();
  SeifertClassification out{SeifertBranch::ReaderCase, "", {}};
  const std::vector<long>& c = s.cone_indices;
  out.trace.push_back("base genus " + std::to_string(s.base_genus) + ", cones " + cone_list(c) +
                      (s.has_boundary ? ", with boundary" : ", closed"));
  if (s.has_boundary) return boundary_case(s, std::move(out));

  if (s.base_genus >= 1) {
    if (s.base_genus == 1 && c.empty()) {
      out.branch = SeifertBranch::Solvable;
      out.summary = "circle bundle over the torus";
      out.trace.push_back("g = 1 without cones: circle bundle over the torus, solvable");
    } else {
      out.branch = SeifertBranch::NonAdorable;
      out.summary = "hyperbolic base of positive genus";
      out.trace.push_back("g >= 1 with cones, or g >= 2: orbifold group maps onto a non-abelian free group");
    }
    return out;
  }

  const std::size_t n = c.size();
  if (n <= 2) {
    out.branch = SeifertBranch::FiniteDerived;
    out.summary = "spherical base, finite cyclic orbifold group";
    out.trace.push_back("g = 0 with at most two cones: orbifold group is finite cyclic");
    return out;
  }
  if (n == 3) {
    const long a = c[0], b = c[1], d = c[2];
    const long lhs = b * d + a * d + a * b;  // (1/a + 1/b + 1/d) * abd
    const long rhs = a * b * d;
    if (lhs > rhs) {
      out.branch = SeifertBranch::FiniteDerived;
      out.summary = "spherical triangle orbifold";
      out.trace.push_back("1/" + std::to_string(a) + " + 1/" + std::to_string(b) + " + 1/" + std::to_string(d) +
                          " > 1: finite orbifold group, derived series finite by the second term");
    } else if (lhs == rhs) {
      out.branch = SeifertBranch::Solvable;
      out.summary = "Euclidean triangle orbifold";
      out.trace.push_back("1/p + 1/q + 1/r = 1: orbifold group is Z^2 extended by a finite cyclic group, solvable");
    } else if (pairwise_coprime(c)) {
      out.branch = SeifertBranch::Perfect;
      out.summary = "homology sphere case";
      out.trace.push_back("hyperbolic with pairwise coprime indices: orbifold group is perfect");
    } else {
      out.branch = SeifertBranch::NonAdorable;
      out.summary = "hyperbolic triangle orbifold with a common index factor";
      out.trace.push_back("hyperbolic, indices not pairwise coprime: not adorable");
    }
    return out;
  }
  if (n == 4 && c[0] == 2 && c[1] == 2 && c[2] == 2 && c[3] == 2) {
    out.branch = SeifertBranch::Solvable;
    out.summary = "Euclidean pillowcase orbifold";
    out.trace.push_back("cones (2,2,2,2): orbifold group is Z^2 extended by Z/2, solvable");
    return out;
  }
  if (n == 4) {
    // killing a cyclically adjacent pair x_i x_j kills the other pair too and
    // leaves Z/gcd * Z/gcd
    static const int pairs[2][4] = {{0, 1, 2, 3}, {1, 2, 3, 0}};
    for (const auto& q : pairs) {
      const long d1 = std::gcd(c[q[0]], c[q[1]]), d2 = std::gcd(c[q[2]], c[q[3]]);
      if (d1 >= 2 && d2 >= 2 && (d1 > 2 || d2 > 2)) {
        out.branch = SeifertBranch::NonAdorable;
        out.summary = "four cones, quotient onto a non-dihedral free product";
        out.trace.push_back("x" + std::to_string(q[0] + 1) + " x" + std::to_string(q[1] + 1) +
                            " = 1 gives Z/" + std::to_string(d1) + " * Z/" + std::to_string(d2) +
                            ", not adorable, hence neither is the orbifold group");
        return out;
      }
    }
    if (is_perfect(orbifold_presentation(s))) return by_perfectness(s, std::move(out));
    out.branch = SeifertBranch::ReaderCase;
    out.summary = "four cones not settled by pairing quotients";
    out.trace.push_back("n = 4: no pairing of cones yields a non-dihedral free product quotient");
    return out;
  }
  if (n == 5) {
    bool qualifying = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) qualifying = qualifying || std::gcd(c[i], c[j]) >= 3;
    if (!qualifying) {
      out.branch = SeifertBranch::ReaderCase;
      out.summary = "five cones with no pair of indices sharing a factor >= 3";
      out.trace.push_back("n = 5 with no pair gcd >= 3: case not settled by the splitting argument");
      out.trace.push_back(std::string("perfectness of the orbifold group: ") +
                          (is_perfect(orbifold_presentation(s)) ? "perfect" : "not perfect"));
      return out;
    }
    out.trace.push_back("n = 5 with a pair of indices sharing a factor >= 3");
  } else {
    out.trace.push_back("hyperbolic base with " + std::to_string(n) + " cones");
  }
  return by_perfectness(s, std::move(out));
}

}  // namespace adorn
