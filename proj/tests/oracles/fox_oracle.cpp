#include "fox_oracle.hpp"

namespace oracle {

namespace {

void prune(Poly& p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
}

long phi_of(const adorn::Word& w, const std::vector<long>& phi) {
  long e = 0;
  for (adorn::Letter l : w) e += l.sign() * phi[l.gen()];
  return e;
}

}  // namespace

Poly fox_abelianized(const adorn::Word& w, std::size_t gen, const std::vector<long>& phi) {
  if (w.empty()) return {};
  if (w.size() == 1) {
    const adorn::Letter l = w[0];
    if (l.gen() != gen) return {};
    if (l.sign() > 0) return {{0, 1}};
    return {{-phi[gen], -1}};  // d(g^-1) = -g^-1
  }
  // split in half and apply the product rule
  const std::size_t mid = w.size() / 2;
  adorn::Word u, v;
  for (std::size_t i = 0; i < w.size(); ++i) (i < mid ? u : v).push_back(w[i]);
  Poly out = fox_abelianized(u, gen, phi);
  const long shift = phi_of(u, phi);
  for (auto [e, c] : fox_abelianized(v, gen, phi)) out[e + shift] += c;
  prune(out);
  return out;
}

Poly normalize(Poly p) {
  prune(p);
  if (p.empty()) return p;
  const long low = p.begin()->first;
  const bool negate = p.rbegin()->second < 0;
  Poly out;
  for (auto [e, c] : p) out[e - low] = negate ? -c : c;
  return out;
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (auto [e, c] : a)
    for (auto [f, d] : b) out[e + f] += c * d;
  prune(out);
  return out;
}

bool equal_up_to_unit(const Poly& a, const Poly& b) { return normalize(a) == normalize(b); }

}  // namespace oracle
