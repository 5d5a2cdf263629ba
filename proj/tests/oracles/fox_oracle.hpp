#pragma once

#include <map>
#include <vector>

#include "adorn/word.hpp"

// Fox derivatives computed straight into Z[t, t^-1] by the product rule,
// without the group ring: d(uv) = du + t^(phi(u)) dv.
namespace oracle {

using Poly = std::map<long, long long>;  // exponent -> coefficient, zeros pruned

Poly fox_abelianized(const adorn::Word& w, std::size_t gen, const std::vector<long>& phi);

// Lowest exponent 0, positive leading coefficient.
Poly normalize(Poly p);
Poly multiply(const Poly& a, const Poly& b);
bool equal_up_to_unit(const Poly& a, const Poly& b);

}  // namespace oracle
