#pragma once

#include "qmink/scalar.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace qmink {

using Letter = std::uint8_t;

/// A word over a generator alphabet. Ordered degree-lexicographically: longer
/// words are greater; equal lengths compare letter by letter.
class Word {
public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](size_t i) const { return letters_[i]; }
  const std::vector<Letter> &letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word sub(size_t pos, size_t len) const;
  Word reversed() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }

  friend Word operator+(const Word &a, const Word &b);
  friend bool operator==(const Word &, const Word &) = default;
  friend std::strong_ordering operator<=>(const Word &a, const Word &b);

private:
  std::vector<Letter> letters_;
};

/// Generator names used when printing; falls back to g<k>.
using NameFn = std::function<std::string(Letter)>;

/// Finite linear combination of words with exact coefficients.
class NCPoly {
public:
  using Terms = std::map<Word, Scalar>;

  NCPoly() = default;
  NCPoly(const Scalar &c) { add(Word{}, c); }
  NCPoly(const Word &w, const Scalar &c = 1) { add(w, c); }
  static NCPoly gen(Letter g) { return NCPoly(Word{g}); }

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  /// -1 for the zero polynomial.
  int degree() const;
  Scalar coeff(const Word &w) const;

  void add(const Word &w, const Scalar &c);

  NCPoly &operator+=(const NCPoly &o);
  NCPoly &operator-=(const NCPoly &o);
  NCPoly &operator*=(const Scalar &s);
  friend NCPoly operator+(NCPoly a, const NCPoly &b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly &b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Scalar &s) { return a *= s; }
  friend NCPoly operator*(const Scalar &s, NCPoly a) { return a *= s; }
  friend NCPoly operator*(const NCPoly &a, const NCPoly &b);
  NCPoly operator-() const { return *this * Scalar(-1); }
  friend bool operator==(const NCPoly &, const NCPoly &) = default;

  /// Words reversed, coefficients conjugated, letters mapped by `letter_star`.
  NCPoly star(const std::function<Letter(Letter)> &letter_star) const;

  std::string to_string(const NameFn &names = {}) const;

private:
  Terms terms_;
};

} // namespace qmink
