#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace adorn {

// A generator or its inverse. Letters order by table column:
// g0 < g0^-1 < g1 < g1^-1 < ...
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::size_t gen, int sign)
      : column_(static_cast<std::uint32_t>(2 * gen + (sign < 0 ? 1 : 0))) {}

  static constexpr Letter from_column(std::size_t column) {
    return Letter(column / 2, (column & 1) ? -1 : 1);
  }

  constexpr std::size_t gen() const { return column_ >> 1; }
  constexpr int sign() const { return (column_ & 1) ? -1 : 1; }
  constexpr std::size_t column() const { return column_; }
  constexpr Letter inverse() const { return from_column(column_ ^ 1u); }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint32_t column_ = 0;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  // g^exponent as a word (not reduced away when exponent == 0: empty).
  static Word power(std::size_t gen, long exponent);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  std::span<const Letter> letters() const { return letters_; }

  void push_back(Letter l) { letters_.push_back(l); }
  void pop_back() { letters_.pop_back(); }
  void append(const Word& w) {
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
  }

  Word inverse() const;
  // Word repeated `exponent` times; negative exponents use the inverse.
  Word pow(long exponent) const;
  // Cyclic rotation so that position `start` becomes the first letter.
  Word rotated(std::size_t start) const;
  // Largest generator index + 1 (0 for the empty word).
  std::size_t arity() const;
  // Exponent sum of generator `gen`.
  long exponent_sum(std::size_t gen) const;
  // Number of letters equal to gen or gen^-1.
  std::size_t occurrences(std::size_t gen) const;

  friend Word operator*(Word lhs, const Word& rhs) {
    lhs.append(rhs);
    return lhs;
  }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

Word free_reduce(const Word& w);
Word cyclically_reduce(const Word& w);

// Commutator u v u^-1 v^-1, freely reduced.
Word commutator(const Word& u, const Word& v);

// Smallest word among the rotations of w and of w^-1; w must be
// cyclically reduced. Two relators with equal keys define the same
// normal closure.
Word cyclic_key(const Word& w);

}  // namespace adorn
