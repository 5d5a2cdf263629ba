#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace adorn {

using Integer = mpz_class;

// Integer Laurent polynomial in t; zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Integer& c);
  static LaurentPoly monomial(const Integer& c, long exponent);
  // coefficients[i] multiplies t^(low + i)
  static LaurentPoly from_coefficients(const std::vector<long>& coefficients, long low = 0);

  bool is_zero() const { return coeffs_.empty(); }
  long min_exponent() const { return coeffs_.begin()->first; }
  long max_exponent() const { return coeffs_.rbegin()->first; }
  // max_exponent - min_exponent (0 for zero and monomials)
  long span() const { return is_zero() ? 0 : max_exponent() - min_exponent(); }
  Integer coefficient(long exponent) const;
  const std::map<long, Integer>& terms() const { return coeffs_; }

  Integer evaluate_at_one() const;
  LaurentPoly shifted(long k) const;
  // t -> t^-1
  LaurentPoly reflected() const;
  // Unit-normal representative: lowest exponent 0, positive leading
  // coefficient. Zero stays zero.
  LaurentPoly normalized() const;
  Integer content() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void set(long e, const Integer& c);
  std::map<long, Integer> coeffs_;
};

// a / b when b divides a exactly in Z[t, t^-1]; throws otherwise.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

// Greatest common divisor, normalized.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

// Fraction-free determinant of a square matrix given row-major.
LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m);

// "t^2 - 3t + 1", descending powers; negative exponents as t^-k.
std::string to_string(const LaurentPoly& p);

// Inverse of to_string; also accepts "*" between coefficient and t.
LaurentPoly parse_laurent(const std::string& s);

}  // namespace adorn
