#include "qmink/errors.hpp"
#include "qmink/quotient.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace qmink;

namespace {

NCPoly x(Letter l) { return NCPoly::gen(l); }

std::vector<NCPoly> commutators(size_t n) {
  std::vector<NCPoly> out;
  for (Letter i = 0; i < n; ++i)
    for (Letter j = i + 1; j < n; ++j)
      out.push_back(x(i) * x(j) - x(j) * x(i));
  return out;
}

void all_words(size_t gens, size_t len, Word prefix, std::vector<Word> &out) {
  if (prefix.size() == len) {
    out.push_back(prefix);
    return;
  }
  for (Letter l = 0; l < gens; ++l) {
    Word w = prefix + Word{l};
    all_words(gens, len, w, out);
  }
}

} // namespace

TEST(Quotient, FreeAlgebraProfile) {
  TruncatedQuotient q(4, {}, 3);
  EXPECT_EQ(q.dimension_profile(), (std::vector<size_t>{1, 4, 16, 64}));
  EXPECT_EQ(q.pivot_count(), 0u);
}

TEST(Quotient, CommutativeProfile) {
  TruncatedQuotient q(4, commutators(4), 3);
  EXPECT_EQ(q.dimension_profile(), (std::vector<size_t>{1, 4, 10, 20}));
  EXPECT_EQ(commutative_profile(4), (std::vector<size_t>{1, 4, 10, 20, 35}));
}

TEST(Quotient, DegreeOneRelationKillsGenerator) {
  TruncatedQuotient q(4, {x(0)}, 3);
  EXPECT_EQ(q.dimension_profile(), (std::vector<size_t>{1, 3, 9, 27}));
  for (const auto &deg : q.nf_basis())
    for (const auto &w : deg)
      EXPECT_EQ(std::count(w.begin(), w.end(), Letter{0}), 0);
}

TEST(Quotient, NormalFormSortsClassically) {
  TruncatedQuotient q(4, commutators(4), 4);
  EXPECT_EQ(q.normal_form(x(1) * x(0)), x(0) * x(1));
  for (const auto &r : q.relations())
    EXPECT_TRUE(q.normal_form(r).is_zero());
  // Independent oracle: sorting letters.
  for (size_t len = 0; len <= 4; ++len) {
    std::vector<Word> words;
    all_words(4, len, Word{}, words);
    for (const auto &w : words) {
      std::vector<Letter> s(w.begin(), w.end());
      std::sort(s.begin(), s.end());
      EXPECT_EQ(q.normal_form(NCPoly(w)), NCPoly(Word(s)));
    }
  }
}

TEST(Quotient, NormalFormIsIdempotentOnBasis) {
  TruncatedQuotient q(4, commutators(4), 3);
  for (const auto &w : q.basis_up_to(3))
    EXPECT_EQ(q.normal_form(NCPoly(w)), NCPoly(w));
}

TEST(Quotient, InhomogeneousRelation) {
  // x1 x0 = x0 x1 - 1: a Weyl algebra with two more commuting generators.
  std::vector<NCPoly> rel = commutators(4);
  rel[0] = x(1) * x(0) - x(0) * x(1) + NCPoly(Scalar(1));
  TruncatedQuotient q(4, rel, 4);
  EXPECT_EQ(q.dimension_profile(), (std::vector<size_t>{1, 4, 10, 20, 35}));
  EXPECT_EQ(q.normal_form(x(1) * x(0)), x(0) * x(1) - NCPoly(Scalar(1)));
}

TEST(Quotient, Errors) {
  EXPECT_THROW(TruncatedQuotient(4, {x(0) * x(1) * x(2)}, 4), DegreeError);
  EXPECT_THROW(TruncatedQuotient(4, {}, 1), DegreeError);
  EXPECT_THROW(TruncatedQuotient(2, {x(3)}, 2), ShapeError);
  TruncatedQuotient q(4, {}, 2);
  EXPECT_THROW(q.normal_form(x(0) * x(0) * x(0)), DegreeError);
}

TEST(Quotient, MultiplyReduces) {
  TruncatedQuotient q(4, commutators(4), 3);
  EXPECT_EQ(q.multiply(x(3), x(2) * x(1)), x(1) * x(2) * x(3));
}
