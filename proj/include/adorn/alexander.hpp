#pragma once

#include <map>
#include <string>
#include <vector>

#include "adorn/laurent.hpp"
#include "adorn/presentation.hpp"

namespace adorn {

// Element of the integral group ring of a free group: freely reduced
// words with non-zero integer coefficients.
class GroupRingElement {
 public:
  GroupRingElement() = default;

  void add(const Word& w, const Integer& c);
  const std::map<Word, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  std::map<Word, Integer> terms_;
};

// Fox derivative d(w)/d(gen).
GroupRingElement fox_derivative(const Word& w, std::size_t gen);

// Image in Z[t, t^-1] under generator g -> t^(exponents[g]).
LaurentPoly abelianize(const GroupRingElement& e, const std::vector<long>& exponents);

// Exponent of t assigned to each generator by the abelianization G -> Z,
// oriented so the first non-zero exponent is positive. Throws NotKnotLike
// unless the abelianization is Z.
std::vector<long> knot_exponents(const GroupPresentation& p);

// Alexander polynomial of a presentation with abelianization Z and
// deficiency one, normalized (lowest exponent 0, positive leading
// coefficient). Throws NotKnotLike or DeficiencyMismatch.
LaurentPoly alexander_polynomial(const GroupPresentation& p);

struct KnotReport {
  LaurentPoly delta;
  long degree = 0;
  bool adorable = false;  // delta == 1: commutator subgroup perfect
  // rank of H^1/H^2, taken to be deg(delta) from the classical identity;
  // not computed, since H^1 has infinite index.
  long derived_quotient_rank = 0;
  std::string rank_provenance = "cited";
  bool value_at_one_is_unit = false;
  bool symmetric = false;
  bool even_degree = false;
  std::vector<std::string> notes;
};

KnotReport knot_adorability_report(const GroupPresentation& p);

}  // namespace adorn
