#include "adorn/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "adorn/errors.hpp"

namespace adorn {

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) coeffs_[0] = c;
}

LaurentPoly LaurentPoly::monomial(const Integer& c, long exponent) {
  LaurentPoly p;
  p.set(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(const std::vector<long>& coefficients, long low) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    p.set(low + static_cast<long>(i), Integer(coefficients[i]));
  return p;
}

void LaurentPoly::set(long e, const Integer& c) {
  if (c == 0)
    coeffs_.erase(e);
  else
    coeffs_[e] = c;
}

Integer LaurentPoly::coefficient(long exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

Integer LaurentPoly::evaluate_at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly p;
  for (const auto& [e, c] : coeffs_) p.coeffs_.emplace(e + k, c);
  return p;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly p;
  for (const auto& [e, c] : coeffs_) p.coeffs_.emplace(-e, c);
  return p;
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return *this;
  LaurentPoly p = shifted(-min_exponent());
  if (p.coeffs_.rbegin()->second < 0) p = -p;
  return p;
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto& [e, c] : coeffs_) g = gcd(g, c);
  return g;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) set(e, coefficient(e) + c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) set(e, coefficient(e) - c);
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly p;
  for (const auto& [e, c] : a.coeffs_) p.coeffs_.emplace(e, -c);
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) p.set(ea + eb, p.coefficient(ea + eb) + ca * cb);
  return p;
}

namespace {

// Dense polynomial, ascending coefficients, no trailing zeros.
using Dense = std::vector<Integer>;

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense to_dense(const LaurentPoly& p) {
  Dense d;
  if (p.is_zero()) return d;
  d.assign(static_cast<std::size_t>(p.span() + 1), 0);
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - p.min_exponent())] = c;
  return d;
}

LaurentPoly from_dense(const Dense& d) {
  LaurentPoly p;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) p += LaurentPoly::monomial(d[i], static_cast<long>(i));
  return p;
}

Dense primitive(Dense a) {
  Integer g = 0;
  for (const auto& c : a) g = gcd(g, c);
  if (g > 1)
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

Dense pseudo_remainder(Dense r, const Dense& b) {
  const std::size_t db = b.size() - 1;
  while (!r.empty() && r.size() - 1 >= db) {
    const Integer lr = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& c : r) c *= b.back();
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= lr * b[i];
    trim(r);
  }
  return r;
}

}  // namespace

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw InvalidArgument("division by zero polynomial");
  if (a.is_zero()) return a;
  LaurentPoly rem = a, quot;
  const Integer& lb = b.terms().rbegin()->second;
  const long eb = b.max_exponent();
  while (!rem.is_zero()) {
    if (rem.span() < b.span()) throw InvalidArgument("polynomial division is not exact");
    const Integer& lr = rem.terms().rbegin()->second;
    if (!mpz_divisible_p(lr.get_mpz_t(), lb.get_mpz_t()))
      throw InvalidArgument("polynomial division is not exact");
    const LaurentPoly q = LaurentPoly::monomial(lr / lb, rem.max_exponent() - eb);
    quot += q;
    rem -= q * b;
  }
  return quot;
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  const Integer content = gcd(a.content(), b.content());
  Dense x = primitive(to_dense(a)), y = primitive(to_dense(b));
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    Dense r = primitive(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return (LaurentPoly(content) * from_dense(x)).normalized();
}

LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InvalidArgument("determinant of non-square matrix");
  if (n == 0) return LaurentPoly(Integer(1));
  bool negate = false;
  LaurentPoly prev(Integer(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return LaurentPoly();
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = LaurentPoly();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const Integer mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1 || e == 0) out += mag.get_str();
    if (e != 0) out += e == 1 ? "t" : "t^" + std::to_string(e);
  }
  return out;
}

LaurentPoly parse_laurent(const std::string& text) {
  std::string s;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char ch = text[k];
    if (ch != ' ' && ch != '*') {
      s += ch;
      continue;
    }
    // "2 3" is not "23"
    if (!s.empty() && std::isalnum(static_cast<unsigned char>(s.back()))) {
      std::size_t next = text.find_first_not_of(" *", k);
      if (next != std::string::npos && std::isdigit(static_cast<unsigned char>(text[next])))
        throw InvalidArgument("missing operator in polynomial \"" + text + "\"");
    }
  }
  if (s.empty()) throw InvalidArgument("empty polynomial");
  LaurentPoly out;
  std::size_t i = 0;
  auto digits = [&](std::string& into) {
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) into += s[i++];
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw InvalidArgument("expected + or - in polynomial \"" + text + "\"");
    }
    std::string coeff;
    digits(coeff);
    long e = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string ex;
        if (i < s.size() && s[i] == '-') ex += s[i++];
        digits(ex);
        if (ex.empty() || ex == "-") throw InvalidArgument("bad exponent in polynomial \"" + text + "\"");
        e = std::stol(ex);
      }
    } else if (coeff.empty()) {
      throw InvalidArgument("bad term in polynomial \"" + text + "\"");
    }
    Integer c = coeff.empty() ? Integer(1) : Integer(coeff);
    out += LaurentPoly::monomial(sign * c, e);
  }
  return out;
}

}  // namespace adorn
