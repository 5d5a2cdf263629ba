#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "adorn/presentation.hpp"

namespace adorn {

using Integer = mpz_class;

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

// Exact determinant (fraction-free elimination). Square matrices only.
Integer determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix d;      // diagonal, non-negative, divisor chain
  IntMatrix u;      // rows x rows, unimodular
  IntMatrix v;      // cols x cols, unimodular
  IntMatrix v_inv;  // inverse of v

  // Diagonal entries d(i,i) for i < min(rows, cols).
  std::vector<Integer> diagonal() const;
};

// d = u * m * v. Pivots are chosen with minimal non-zero absolute value,
// ties broken by lowest row then lowest column.
SmithForm smith_normal_form(const IntMatrix& m);

// Finitely generated abelian group Z^rank + Z/t1 + ... + Z/tk, t_i | t_{i+1},
// every t_i >= 2.
struct AbelianInvariants {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  bool is_finite() const { return rank == 0; }
  // Group order; only meaningful when finite.
  Integer order() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

// "trivial", "Z", "Z^2 ⊕ Z/2 ⊕ Z/6", ...
std::string to_string(const AbelianInvariants& a);

// Cokernel invariants of a relation matrix (rows are relations).
AbelianInvariants cokernel_invariants(const IntMatrix& m);

// Rows are relators, columns are generator exponent sums.
IntMatrix exponent_matrix(const GroupPresentation& p);

AbelianInvariants abelianization(const GroupPresentation& p);

bool is_perfect(const GroupPresentation& p);

// Rank of the exterior square of a free abelian group of rank r: r(r-1)/2.
std::size_t exterior_square_rank(std::size_t r);

// Explicit abelianization map G -> Z^rank + (+) Z/t_i. Coordinates of the
// free part come first; torsion coordinates are reduced mod t_i.
class AbelianQuotient {
 public:
  explicit AbelianQuotient(const GroupPresentation& p);

  const AbelianInvariants& invariants() const { return invariants_; }
  // Image of generator `gen` (length rank + torsion.size()).
  const std::vector<Integer>& image(std::size_t gen) const { return images_.at(gen); }
  std::vector<Integer> image(const Word& w) const;

 private:
  AbelianInvariants invariants_;
  std::vector<std::vector<Integer>> images_;
};

}  // namespace adorn
