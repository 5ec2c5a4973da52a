#include "qmink/errors.hpp"
#include "qmink/minkowski.hpp"

#include <gtest/gtest.h>

using namespace qmink;

namespace {
NCPoly x(Letter l) { return NCPoly::gen(l); }
} // namespace

TEST(Minkowski, ClassicalRelationsAreCommutators) {
  const auto rels = mink_relations(builtin("classical"));
  EXPECT_EQ(rels.size(), 12u); // (ij) and (ji) rows for i != j
  for (const auto &r : rels) {
    EXPECT_EQ(r.degree(), 2);
    EXPECT_EQ(r.size(), 2u);
  }
}

TEST(Minkowski, ClassicalProfile) {
  const MinkowskiAlgebra alg = make_minkowski(builtin("classical"));
  const PbwResult r = pbw_check(alg, 4);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.profile, (std::vector<size_t>{1, 4, 10, 20, 35}));
  EXPECT_EQ(r.expected, r.profile);
  EXPECT_THROW(pbw_check(alg, 5), DegreeError);
}

TEST(Minkowski, StarBasics) {
  EXPECT_EQ(mink_star(Scalar::i() * x(0)), -Scalar::i() * x(0));
  EXPECT_EQ(mink_star(x(0) * x(1)), x(1) * x(0));
  const NCPoly p = Scalar(2, 3) * x(0) * x(2) * x(3) + Scalar(-1, 1) * x(1) + NCPoly(Scalar::i());
  EXPECT_EQ(mink_star(mink_star(p)), p);
}

TEST(Minkowski, ClassicalStar) {
  const MinkowskiAlgebra alg = make_minkowski(builtin("classical"), 3);
  EXPECT_TRUE(star_closure_failures(alg).empty());
  const NCPoly p = x(3) * x(1) * x(0) + Scalar(5) * x(2) * x(0) - x(1);
  EXPECT_EQ(alg.quotient.normal_form(mink_star(p)), alg.quotient.normal_form(p));
}

TEST(Minkowski, ConstantTermGivesCanonicalCommutator) {
  // Row (01) reads x1 x0 + T_10 - x0 x1 - T_01 = 0.
  PoincareInstance c = builtin("classical");
  c.T(1, 0) = 1;
  c.T(4, 0) = -1;
  const MinkowskiAlgebra alg = make_minkowski(c, 3);
  EXPECT_TRUE(pbw_check(alg, 3).pass);
  EXPECT_EQ(alg.quotient.normal_form(x(1) * x(0)), x(0) * x(1) + NCPoly(Scalar(2)));
}

TEST(Minkowski, Printing) {
  const NCPoly p = x(1) * x(0) - Scalar(2) * x(0) - x(3) + NCPoly(Scalar(3));
  EXPECT_EQ(p.to_string(coordinate_name), "x1*x0 - x3 - 2*x0 + 3");
  EXPECT_EQ((-x(2) + Scalar(1, 1) * x(0)).to_string(coordinate_name), "-x2 + (1+i)*x0");
  EXPECT_EQ(NCPoly().to_string(coordinate_name), "0");
}
