#include "qmink/fock.hpp"

#include "qmink/errors.hpp"

#include <algorithm>
#include <numeric>

namespace qmink {

CTensor CTensor::pure(Slots slots, const Scalar &c) {
  CTensor t(slots.size());
  t.add(slots, c);
  return t;
}

CTensor CTensor::product(const MinkowskiAlgebra &alg, const std::vector<NCPoly> &factors) {
  CTensor acc = pure({});
  for (const auto &f : factors) {
    NCPoly nf = alg.quotient.normal_form(f);
    CTensor next(acc.n_ + 1);
    for (const auto &[slots, c] : acc.terms_)
      for (const auto &[w, fc] : nf.terms()) {
        Slots s = slots;
        s.push_back(w);
        next.add(s, c * fc);
      }
    acc = std::move(next);
  }
  return acc;
}

void CTensor::add(const Slots &s, const Scalar &c) {
  if (s.size() != n_)
    throw ShapeError("tensor slot count mismatch");
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (inserted)
    return;
  it->second += c;
  if (it->second.is_zero())
    terms_.erase(it);
}

CTensor &CTensor::operator+=(const CTensor &o) {
  for (const auto &[s, c] : o.terms_)
    add(s, c);
  return *this;
}

CTensor &CTensor::operator-=(const CTensor &o) {
  for (const auto &[s, c] : o.terms_)
    add(s, -c);
  return *this;
}

CTensor &CTensor::operator*=(const Scalar &c) {
  if (c.is_zero())
    terms_.clear();
  for (auto &[s, v] : terms_)
    v *= c;
  return *this;
}

std::string CTensor::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (const auto &[slots, c] : terms_) {
    if (!out.empty())
      out += " + ";
    out += "(" + c.to_string() + ")";
    for (size_t k = 0; k < slots.size(); ++k)
      out += (k ? " (x) " : " ") + NCPoly(slots[k]).to_string(coordinate_name);
  }
  return out;
}

Coaction coaction(const MinkowskiAlgebra &alg, const NCPoly &p) {
  if (p.degree() > static_cast<int>(alg.quotient.degree_cap()))
    throw DegreeError("coaction input exceeds the degree cap");
  Coaction out;
  std::map<std::pair<Word, Word>, Scalar> raw;
  for (const auto &[w, c] : p.terms()) {
    std::map<std::pair<Word, Word>, Scalar> acc{{{Word{}, Word{}}, c}};
    size_t count = 1;
    for (Letter x : w) {
      std::map<std::pair<Word, Word>, Scalar> next;
      for (const auto &[legs, v] : acc) {
        for (Letter j = 0; j < 4; ++j)
          next[{legs.first + Word{lambda_letter(x, j)}, legs.second + Word{j}}] += v;
        next[{legs.first + Word{y_letter(x)}, legs.second}] += v;
      }
      count *= 5;
      acc = std::move(next);
    }
    out.raw_terms += count;
    for (const auto &[legs, v] : acc)
      raw[legs] += v;
  }
  for (const auto &[legs, v] : raw)
    out.legs[legs.first].add(legs.second, v);
  for (auto it = out.legs.begin(); it != out.legs.end();) {
    it->second = alg.quotient.normal_form(it->second);
    it = it->second.is_zero() ? out.legs.erase(it) : std::next(it);
  }
  return out;
}

CTensor interchange_at(const CqtEvaluator &ev, const MinkowskiAlgebra &alg, const CTensor &t,
                       size_t m) {
  if (m + 1 >= t.slots())
    throw ShapeError("interchange position out of range");
  CTensor out(t.slots());
  std::map<Word, Coaction> cache;
  auto psi = [&](const Word &w) -> const Coaction & {
    auto it = cache.find(w);
    if (it == cache.end())
      it = cache.emplace(w, coaction(alg, NCPoly(w))).first;
    return it->second;
  };
  for (const auto &[slots, c] : t.terms()) {
    const Coaction &pa = psi(slots[m]);
    const Coaction &pb = psi(slots[m + 1]);
    for (const auto &[a1, a2] : pa.legs)
      for (const auto &[b1, b2] : pb.legs) {
        Scalar r = ev.r_word(b1, a1);
        if (r.is_zero())
          continue;
        r *= c;
        for (const auto &[wb, cb] : b2.terms())
          for (const auto &[wa, ca] : a2.terms()) {
            CTensor::Slots s = slots;
            s[m] = wb;
            s[m + 1] = wa;
            out.add(s, r * cb * ca);
          }
      }
  }
  return out;
}

CTensor interchange_k(const CqtEvaluator &ev, const MinkowskiAlgebra &alg, const CTensor &t) {
  if (t.slots() != 2)
    throw ShapeError("K acts on two-slot tensors");
  return interchange_at(ev, alg, t, 0);
}

std::vector<size_t> reduced_word(const std::vector<size_t> &sigma) {
  std::vector<size_t> seen(sigma.size(), 0);
  for (size_t v : sigma) {
    if (v >= sigma.size() || seen[v]++)
      throw ShapeError("not a permutation");
  }
  std::vector<size_t> arr = sigma, swaps;
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i + 1 < arr.size(); ++i)
      if (arr[i] > arr[i + 1]) {
        std::swap(arr[i], arr[i + 1]);
        swaps.push_back(i);
        changed = true;
      }
  }
  return swaps;
}

namespace {

void require_cotriangular(const CqtEvaluator &ev) {
  CqtCheckResult ct = ct_check(ev);
  if (!ct.pass)
    throw NotCotriangular("permutation action needs a cotriangular structure: " + ct.witness);
}

void require_slots(const CTensor &t, size_t max_slots) {
  if (t.slots() > max_slots)
    throw ShapeError("tensor has " + std::to_string(t.slots()) + " slots, limit is " +
                     std::to_string(max_slots));
}

CTensor apply_swaps(const CqtEvaluator &ev, const MinkowskiAlgebra &alg,
                    const std::vector<size_t> &swaps, CTensor t) {
  for (size_t m : swaps)
    t = interchange_at(ev, alg, t, m);
  return t;
}

std::vector<size_t> transposition(size_t n, size_t a, size_t b) {
  std::vector<size_t> s(n);
  std::iota(s.begin(), s.end(), 0);
  std::swap(s[a], s[b]);
  return s;
}

CTensor apply_to_first(const MinkowskiAlgebra &alg, const SingleParticleOp &w_op,
                       const CTensor &t) {
  CTensor out(t.slots());
  for (const auto &[slots, c] : t.terms()) {
    NCPoly img = alg.quotient.normal_form(w_op(NCPoly(slots[0])));
    for (const auto &[w, wc] : img.terms()) {
      CTensor::Slots s = slots;
      s[0] = w;
      out.add(s, c * wc);
    }
  }
  return out;
}

} // namespace

CTensor braid_action_word(const CqtEvaluator &ev, const MinkowskiAlgebra &alg,
                          const std::vector<size_t> &swaps, const CTensor &t,
                          size_t max_slots) {
  require_slots(t, max_slots);
  require_cotriangular(ev);
  return apply_swaps(ev, alg, swaps, t);
}

CTensor braid_action(const CqtEvaluator &ev, const MinkowskiAlgebra &alg,
                     const std::vector<size_t> &sigma, const CTensor &t, size_t max_slots) {
  if (sigma.size() != t.slots())
    throw ShapeError("permutation size does not match the tensor");
  return braid_action_word(ev, alg, reduced_word(sigma), t, max_slots);
}

CTensor symmetrize(const CqtEvaluator &ev, const MinkowskiAlgebra &alg, const CTensor &t,
                   size_t max_slots) {
  require_slots(t, max_slots);
  require_cotriangular(ev);
  std::vector<size_t> sigma(t.slots());
  std::iota(sigma.begin(), sigma.end(), 0);
  CTensor out(t.slots());
  mpz_class count = 0;
  do {
    out += apply_swaps(ev, alg, reduced_word(sigma), t);
    ++count;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out * Scalar(mpq_class(1, count));
}

CTensor lift_operator(const CqtEvaluator &ev, const MinkowskiAlgebra &alg,
                      const SingleParticleOp &w_op, size_t n, const CTensor &t,
                      size_t max_slots) {
  if (t.slots() != n)
    throw ShapeError("lift order does not match the tensor");
  require_slots(t, max_slots);
  CTensor out(n);
  if (n == 0)
    return out;
  require_cotriangular(ev);
  for (size_t m = 0; m < n; ++m) {
    std::vector<size_t> swaps = reduced_word(transposition(n, 0, m));
    CTensor moved = apply_swaps(ev, alg, swaps, t);
    CTensor acted = apply_to_first(alg, w_op, moved);
    // (1,m) is an involution, so the same word applies it again.
    out += apply_swaps(ev, alg, swaps, acted);
  }
  return out;
}

FockVector lift_operator(const CqtEvaluator &ev, const MinkowskiAlgebra &alg,
                         const SingleParticleOp &w_op, const FockVector &v, size_t max_slots) {
  FockVector out;
  for (const auto &[n, t] : v.sectors)
    out.sectors.emplace(n, lift_operator(ev, alg, w_op, n, t, max_slots));
  return out;
}

} // namespace qmink
