#pragma once

#include "qmink/ncpoly.hpp"

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qmink {

/// Quotient of the free algebra on `generators` letters by the two-sided
/// ideal of `relations`, truncated at total degree `cap`.
///
/// The ideal is replaced by the span of all u*r*v with
/// |u| + deg(r) + |v| <= cap. That span is echelonized with the
/// degree-lexicographic order (pivot = greatest word of a row) and then fully
/// back-reduced, so the normal form of a polynomial is the unique
/// representative supported on non-pivot words. The result does not depend on
/// the order in which relations are given.
class TruncatedQuotient {
public:
  TruncatedQuotient(size_t generators, std::vector<NCPoly> relations, size_t cap);

  size_t generators() const { return generators_; }
  size_t degree_cap() const { return cap_; }
  const std::vector<NCPoly> &relations() const { return relations_; }

  /// Throws DegreeError when deg(p) exceeds the cap.
  NCPoly normal_form(const NCPoly &p) const;
  /// normal_form(a * b).
  NCPoly multiply(const NCPoly &a, const NCPoly &b) const;

  /// Words surviving reduction, per degree 0..cap, ascending.
  const std::vector<std::vector<Word>> &nf_basis() const { return nf_basis_; }
  /// All nf_basis words of degree <= n.
  std::vector<Word> basis_up_to(size_t n) const;
  std::vector<size_t> dimension_profile() const;
  size_t pivot_count() const { return pivots_.size(); }

private:
  using Key = std::uint64_t;
  using Row = std::vector<std::pair<Key, Scalar>>; // descending keys, lead excluded

  Key key_of(const Word &w) const;
  Word word_of(Key k) const;

  size_t generators_;
  size_t cap_;
  std::vector<NCPoly> relations_;
  std::vector<Key> offsets_; // offsets_[d] = number of words of degree < d
  std::unordered_map<Key, Row> pivots_;
  std::vector<std::vector<Word>> nf_basis_;
};

/// Binomial-count profile C(n+3, 3) of commutative monomials in 4 variables.
std::vector<size_t> commutative_profile(size_t cap);

} // namespace qmink
