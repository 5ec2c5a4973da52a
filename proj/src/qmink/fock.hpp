#pragma once

#include "qmink/braiding.hpp"
#include "qmink/minkowski.hpp"

#include <functional>
#include <map>
#include <vector>

namespace qmink {

inline constexpr size_t kDefaultMaxSlots = 4;

/// Element of C^{(x)n}: a combination of n-tuples of normal-form words.
class CTensor {
public:
  using Slots = std::vector<Word>;

  explicit CTensor(size_t n = 0) : n_(n) {}
  /// Pure tensor of the given slot words with coefficient c.
  static CTensor pure(Slots slots, const Scalar &c = 1);
  /// p_1 (x) ... (x) p_n, every factor reduced in `alg` first.
  static CTensor product(const MinkowskiAlgebra &alg, const std::vector<NCPoly> &factors);

  size_t slots() const { return n_; }
  const std::map<Slots, Scalar> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Slots &s, const Scalar &c);
  CTensor &operator+=(const CTensor &o);
  CTensor &operator-=(const CTensor &o);
  CTensor &operator*=(const Scalar &c);
  friend CTensor operator+(CTensor a, const CTensor &b) { return a += b; }
  friend CTensor operator-(CTensor a, const CTensor &b) { return a -= b; }
  friend CTensor operator*(CTensor a, const Scalar &c) { return a *= c; }
  friend CTensor operator*(const Scalar &c, CTensor a) { return a *= c; }
  friend bool operator==(const CTensor &, const CTensor &) = default;

  std::string to_string() const;

private:
  size_t n_;
  std::map<Slots, Scalar> terms_;
};

/// Psi(p) as B-word -> C-leg (normal form). B legs are free words.
struct Coaction {
  std::map<Word, NCPoly> legs;
  /// Product terms before collecting equal legs.
  size_t raw_terms = 0;
};

/// Psi x_i = Lambda_ij (x) x_j + y_i (x) 1, extended multiplicatively.
Coaction coaction(const MinkowskiAlgebra &alg, const NCPoly &p);

/// K(a (x) b) = R(b1 (x) a1) b2 (x) a2 with Psi(a) = a1 (x) a2.
CTensor interchange_k(const CqtEvaluator &ev, const MinkowskiAlgebra &alg, const CTensor &t);
/// K on slots (m, m+1) of an n-slot tensor.
CTensor interchange_at(const CqtEvaluator &ev, const MinkowskiAlgebra &alg, const CTensor &t,
                       size_t m);

/// Adjacent-transposition indices whose product is sigma, first applied first.
std::vector<size_t> reduced_word(const std::vector<size_t> &sigma);

/// pi_sigma(t): the slot content at position i moves to sigma[i].
/// Throws NotCotriangular when ct_check fails for `ev`.
CTensor braid_action(const CqtEvaluator &ev, const MinkowskiAlgebra &alg,
                     const std::vector<size_t> &sigma, const CTensor &t,
                     size_t max_slots = kDefaultMaxSlots);
/// Applies K at the listed slot pairs, first index first.
CTensor braid_action_word(const CqtEvaluator &ev, const MinkowskiAlgebra &alg,
                          const std::vector<size_t> &swaps, const CTensor &t,
                          size_t max_slots = kDefaultMaxSlots);

/// (1/n!) sum_sigma pi_sigma(t).
CTensor symmetrize(const CqtEvaluator &ev, const MinkowskiAlgebra &alg, const CTensor &t,
                   size_t max_slots = kDefaultMaxSlots);

using SingleParticleOp = std::function<NCPoly(const NCPoly &)>;

/// W^(n) = sum_m pi_(1,m) (W (x) 1^{n-1}) pi_(1,m).
CTensor lift_operator(const CqtEvaluator &ev, const MinkowskiAlgebra &alg,
                      const SingleParticleOp &w_op, size_t n, const CTensor &t,
                      size_t max_slots = kDefaultMaxSlots);

/// Graded storage for F = (+)_n C^{(x)_s n}.
struct FockVector {
  std::map<size_t, CTensor> sectors;
};

/// (+)_n W^(n), sector by sector.
FockVector lift_operator(const CqtEvaluator &ev, const MinkowskiAlgebra &alg,
                         const SingleParticleOp &w_op, const FockVector &v,
                         size_t max_slots = kDefaultMaxSlots);

} // namespace qmink
