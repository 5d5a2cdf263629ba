#include "adorn/abelian.hpp"

#include <optional>
#include <utility>

#include "adorn/errors.hpp"

namespace adorn {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw InvalidArgument("matrix entry count mismatch");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

namespace {

class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& m)
      : d_(m),
        u_(IntMatrix::identity(m.rows())),
        v_(IntMatrix::identity(m.cols())),
        v_inv_(IntMatrix::identity(m.cols())) {}

  SmithForm run() {
    const std::size_t steps = std::min(d_.rows(), d_.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      if (!reduce_at(t)) break;
      if (d_(t, t) < 0) negate_row(t);
    }
    return {std::move(d_), std::move(u_), std::move(v_), std::move(v_inv_)};
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> find_pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < d_.rows(); ++i)
      for (std::size_t j = t; j < d_.cols(); ++j) {
        if (d_(i, j) == 0) continue;
        Integer a = abs(d_(i, j));
        if (!best || a < best_abs) {
          best = {i, j};
          best_abs = a;
        }
      }
    return best;
  }

  // Clears row and column t around a pivot dividing the remaining block.
  // Returns false when the remaining block is zero.
  bool reduce_at(std::size_t t) {
    while (true) {
      auto pivot = find_pivot(t);
      if (!pivot) return false;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < d_.rows(); ++i) {
        if (d_(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d_(i, t).get_mpz_t(), d_(t, t).get_mpz_t());
        add_row_multiple(i, t, -q);
        if (d_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d_.cols(); ++j) {
        if (d_(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d_(t, j).get_mpz_t(), d_(t, t).get_mpz_t());
        add_col_multiple(j, t, -q);
        if (d_(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < d_.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < d_.cols(); ++j)
          if (!mpz_divisible_p(d_(i, j).get_mpz_t(), d_(t, t).get_mpz_t())) {
            add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides) return true;
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d_.cols(); ++j) std::swap(d_(a, j), d_(b, j));
    for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_(a, j), u_(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d_.rows(); ++i) std::swap(d_(i, a), d_(i, b));
    for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, a), v_(i, b));
    for (std::size_t j = 0; j < v_inv_.cols(); ++j) std::swap(v_inv_(a, j), v_inv_(b, j));
  }

  // row[target] += k * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& k) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(target, j) += k * d_(source, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(target, j) += k * u_(source, j);
  }

  // col[target] += k * col[source]; v_inv gets the inverse row operation.
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& k) {
    for (std::size_t i = 0; i < d_.rows(); ++i) d_(i, target) += k * d_(i, source);
    for (std::size_t i = 0; i < v_.rows(); ++i) v_(i, target) += k * v_(i, source);
    for (std::size_t j = 0; j < v_inv_.cols(); ++j) v_inv_(source, j) -= k * v_inv_(target, j);
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(r, j) = -d_(r, j);
    for (std::size_t j = 0; j < u_.cols(); ++j) u_(r, j) = -u_(r, j);
  }

  IntMatrix d_, u_, v_, v_inv_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) { return SmithReducer(m).run(); }

Integer AbelianInvariants::order() const {
  Integer n = 1;
  for (const auto& t : torsion) n *= t;
  return n;
}

std::string to_string(const AbelianInvariants& a) {
  if (a.is_trivial()) return "trivial";
  std::string out;
  if (a.rank == 1) out = "Z";
  if (a.rank > 1) out = "Z^" + std::to_string(a.rank);
  for (const auto& t : a.torsion) {
    if (!out.empty()) out += " ⊕ ";
    out += "Z/" + t.get_str();
  }
  return out;
}

AbelianInvariants cokernel_invariants(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  AbelianInvariants inv;
  std::size_t nonzero = 0;
  for (const auto& x : s.diagonal()) {
    if (x == 0) continue;
    ++nonzero;
    if (x > 1) inv.torsion.push_back(x);
  }
  inv.rank = m.cols() - nonzero;
  return inv;
}

IntMatrix exponent_matrix(const GroupPresentation& p) {
  IntMatrix m(p.relators().size(), p.n_generators());
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (Letter l : p.relators()[r]) m(r, l.gen()) += l.sign();
  return m;
}

AbelianInvariants abelianization(const GroupPresentation& p) {
  return cokernel_invariants(exponent_matrix(p));
}

bool is_perfect(const GroupPresentation& p) { return abelianization(p).is_trivial(); }

std::size_t exterior_square_rank(std::size_t r) { return r * (r - (r > 0 ? 1 : 0)) / 2; }

AbelianQuotient::AbelianQuotient(const GroupPresentation& p) {
  const IntMatrix m = exponent_matrix(p);
  const SmithForm s = smith_normal_form(m);
  const std::size_t n = p.n_generators();
  std::vector<Integer> diag(n, 0);
  for (std::size_t i = 0; i < std::min(m.rows(), n); ++i) diag[i] = s.d(i, i);

  // free coordinates first, then torsion in divisor-chain order
  std::vector<std::size_t> coords;
  std::vector<Integer> moduli;
  for (std::size_t i = 0; i < n; ++i)
    if (diag[i] == 0) {
      coords.push_back(i);
      moduli.push_back(0);
    }
  invariants_.rank = coords.size();
  for (std::size_t i = 0; i < n; ++i)
    if (diag[i] > 1) {
      coords.push_back(i);
      moduli.push_back(diag[i]);
      invariants_.torsion.push_back(diag[i]);
    }

  images_.assign(n, std::vector<Integer>(coords.size()));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t k = 0; k < coords.size(); ++k) {
      Integer x = s.v(g, coords[k]);
      if (moduli[k] != 0) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), moduli[k].get_mpz_t());
      images_[g][k] = x;
    }
}

std::vector<Integer> AbelianQuotient::image(const Word& w) const {
  const std::size_t dim = invariants_.rank + invariants_.torsion.size();
  std::vector<Integer> out(dim, 0);
  for (Letter l : w)
    for (std::size_t k = 0; k < dim; ++k) out[k] += l.sign() * images_.at(l.gen())[k];
  for (std::size_t k = 0; k < invariants_.torsion.size(); ++k) {
    Integer& x = out[invariants_.rank + k];
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), invariants_.torsion[k].get_mpz_t());
  }
  return out;
}

}  // namespace adorn
