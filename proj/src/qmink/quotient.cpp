#include "qmink/quotient.hpp"

#include "qmink/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace qmink {

namespace {

using Acc = std::map<std::uint64_t, Scalar, std::greater<>>;

void accumulate(Acc &acc, std::uint64_t key, const Scalar &c) {
  auto [it, inserted] = acc.try_emplace(key, c);
  if (inserted)
    return;
  it->second += c;
  if (it->second.is_zero())
    acc.erase(it);
}

// All words of length exactly d over g letters, ascending.
std::vector<Word> words_of_length(size_t g, size_t d) {
  std::vector<Word> out;
  std::vector<Letter> cur(d, 0);
  size_t count = 1;
  for (size_t k = 0; k < d; ++k)
    count *= g;
  out.reserve(count);
  for (size_t n = 0; n < count; ++n) {
    size_t v = n;
    for (size_t k = d; k-- > 0;) {
      cur[k] = static_cast<Letter>(v % g);
      v /= g;
    }
    out.emplace_back(cur);
  }
  return out;
}

} // namespace

TruncatedQuotient::TruncatedQuotient(size_t generators, std::vector<NCPoly> relations,
                                     size_t cap)
    : generators_(generators), cap_(cap), relations_(std::move(relations)) {
  if (cap_ < 2)
    throw DegreeError("degree cap must be at least 2");
  if (generators_ == 0 || generators_ > 256)
    throw ShapeError("generator count must be in 1..256");
  offsets_.assign(cap_ + 2, 0);
  Key pow = 1;
  for (size_t d = 0; d <= cap_; ++d) {
    offsets_[d + 1] = offsets_[d] + pow;
    pow *= generators_;
  }
  for (const auto &r : relations_) {
    if (r.degree() > 2)
      throw DegreeError("relation of degree " + std::to_string(r.degree()) + " exceeds 2");
    for (const auto &[w, c] : r.terms())
      for (Letter l : w)
        if (l >= generators_)
          throw ShapeError("relation uses an unknown generator");
  }

  std::vector<std::vector<Word>> words(cap_ + 1);
  for (size_t d = 0; d <= cap_; ++d)
    words[d] = words_of_length(generators_, d);

  auto insert_row = [&](Acc acc) {
    // Reduce against existing pivots, greatest key first; every subtraction
    // only introduces strictly smaller keys.
    for (auto it = acc.begin(); it != acc.end();) {
      auto piv = pivots_.find(it->first);
      if (piv == pivots_.end()) {
        ++it;
        continue;
      }
      Key k = it->first;
      Scalar c = it->second;
      acc.erase(it);
      for (const auto &[tk, tc] : piv->second)
        accumulate(acc, tk, -(c * tc));
      it = acc.lower_bound(k);
    }
    if (acc.empty())
      return;
    auto lead = acc.begin();
    Key lead_key = lead->first;
    Scalar inv = lead->second.inverse();
    Row row;
    row.reserve(acc.size() - 1);
    for (auto it = std::next(lead); it != acc.end(); ++it)
      row.emplace_back(it->first, it->second * inv);
    pivots_.emplace(lead_key, std::move(row));
  };

  for (const auto &r : relations_) {
    if (r.is_zero())
      continue;
    size_t dr = static_cast<size_t>(r.degree());
    if (dr > cap_)
      continue;
    size_t room = cap_ - dr;
    for (size_t du = 0; du <= room; ++du)
      for (size_t dv = 0; du + dv <= room; ++dv)
        for (const auto &u : words[du])
          for (const auto &v : words[dv]) {
            Acc acc;
            for (const auto &[w, c] : r.terms())
              accumulate(acc, key_of(u + w + v), c);
            insert_row(std::move(acc));
          }
  }

  // Back-substitution so that no row tail contains a pivot key.
  std::vector<Key> keys;
  keys.reserve(pivots_.size());
  for (const auto &[k, _] : pivots_)
    keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  for (Key k : keys) {
    Row &row = pivots_[k];
    bool dirty = false;
    for (const auto &[tk, tc] : row)
      if (pivots_.count(tk)) {
        dirty = true;
        break;
      }
    if (!dirty)
      continue;
    Acc acc;
    for (const auto &[tk, tc] : row) {
      auto piv = pivots_.find(tk);
      if (piv == pivots_.end()) {
        accumulate(acc, tk, tc);
        continue;
      }
      for (const auto &[sk, sc] : piv->second)
        accumulate(acc, sk, -(tc * sc));
    }
    row.assign(acc.begin(), acc.end());
  }

  nf_basis_.resize(cap_ + 1);
  for (size_t d = 0; d <= cap_; ++d)
    for (const auto &w : words[d])
      if (!pivots_.count(key_of(w)))
        nf_basis_[d].push_back(w);
}

TruncatedQuotient::Key TruncatedQuotient::key_of(const Word &w) const {
  Key v = 0;
  for (Letter l : w)
    v = v * generators_ + l;
  return offsets_[w.size()] + v;
}

Word TruncatedQuotient::word_of(Key k) const {
  size_t d = 0;
  while (offsets_[d + 1] <= k)
    ++d;
  Key v = k - offsets_[d];
  std::vector<Letter> l(d);
  for (size_t i = d; i-- > 0;) {
    l[i] = static_cast<Letter>(v % generators_);
    v /= generators_;
  }
  return Word(std::move(l));
}

NCPoly TruncatedQuotient::normal_form(const NCPoly &p) const {
  if (p.degree() > static_cast<int>(cap_))
    throw DegreeError("polynomial of degree " + std::to_string(p.degree()) +
                      " exceeds the degree cap " + std::to_string(cap_));
  Acc acc;
  for (const auto &[w, c] : p.terms()) {
    for (Letter l : w)
      if (l >= generators_)
        throw ShapeError("polynomial uses an unknown generator");
    Key k = key_of(w);
    auto piv = pivots_.find(k);
    if (piv == pivots_.end()) {
      accumulate(acc, k, c);
      continue;
    }
    for (const auto &[tk, tc] : piv->second)
      accumulate(acc, tk, -(c * tc));
  }
  NCPoly out;
  for (const auto &[k, c] : acc)
    out.add(word_of(k), c);
  return out;
}

NCPoly TruncatedQuotient::multiply(const NCPoly &a, const NCPoly &b) const {
  return normal_form(a * b);
}

std::vector<Word> TruncatedQuotient::basis_up_to(size_t n) const {
  std::vector<Word> out;
  for (size_t d = 0; d <= std::min(n, cap_); ++d)
    out.insert(out.end(), nf_basis_[d].begin(), nf_basis_[d].end());
  return out;
}

std::vector<size_t> TruncatedQuotient::dimension_profile() const {
  std::vector<size_t> out;
  for (const auto &b : nf_basis_)
    out.push_back(b.size());
  return out;
}

std::vector<size_t> commutative_profile(size_t cap) {
  std::vector<size_t> out;
  for (size_t n = 0; n <= cap; ++n)
    out.push_back((n + 3) * (n + 2) * (n + 1) / 6);
  return out;
}

} // namespace qmink
