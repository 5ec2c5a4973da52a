#include "qmink/ncpoly.hpp"

namespace qmink {

Word Word::sub(size_t pos, size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

Word operator+(const Word &a, const Word &b) {
  std::vector<Letter> l(a.letters_);
  l.insert(l.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(l));
}

std::strong_ordering operator<=>(const Word &a, const Word &b) {
  if (auto c = a.size() <=> b.size(); c != 0)
    return c;
  return a.letters_ <=> b.letters_;
}

int NCPoly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
}

Scalar NCPoly::coeff(const Word &w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void NCPoly::add(const Word &w, const Scalar &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted)
    return;
  it->second += c;
  if (it->second.is_zero())
    terms_.erase(it);
}

NCPoly &NCPoly::operator+=(const NCPoly &o) {
  for (const auto &[w, c] : o.terms_)
    add(w, c);
  return *this;
}

NCPoly &NCPoly::operator-=(const NCPoly &o) {
  for (const auto &[w, c] : o.terms_)
    add(w, -c);
  return *this;
}

NCPoly &NCPoly::operator*=(const Scalar &s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[w, c] : terms_)
    c *= s;
  return *this;
}

NCPoly operator*(const NCPoly &a, const NCPoly &b) {
  NCPoly out;
  for (const auto &[wa, ca] : a.terms_)
    for (const auto &[wb, cb] : b.terms_)
      out.add(wa + wb, ca * cb);
  return out;
}

NCPoly NCPoly::star(const std::function<Letter(Letter)> &letter_star) const {
  NCPoly out;
  for (const auto &[w, c] : terms_) {
    std::vector<Letter> l(w.size());
    for (size_t k = 0; k < w.size(); ++k)
      l[k] = letter_star(w[w.size() - 1 - k]);
    out.add(Word(std::move(l)), c.conj());
  }
  return out;
}

std::string NCPoly::to_string(const NameFn &names) const {
  if (terms_.empty())
    return "0";
  std::string out;
  // Highest word first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[w, c] = *it;
    std::string coeff = c.to_string();
    if (!c.is_real() && c.re() != 0)
      coeff = "(" + coeff + ")";
    const bool negative = coeff[0] == '-';
    if (!out.empty()) {
      out += negative ? " - " : " + ";
      if (negative)
        coeff.erase(0, 1);
    }
    const bool unit = coeff == "1" || coeff == "-1";
    if (w.empty()) {
      out += coeff;
      continue;
    }
    if (coeff == "-1")
      out += "-";
    else if (!unit)
      out += coeff + "*";
    for (size_t k = 0; k < w.size(); ++k) {
      if (k)
        out += "*";
      out += names ? names(w[k]) : "g" + std::to_string(w[k]);
    }
  }
  return out;
}

} // namespace qmink
