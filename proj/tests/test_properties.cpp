// Randomized invariants with fixed seeds.
#include "qmink/braiding.hpp"
#include "qmink/calculus.hpp"
#include "qmink/minkowski.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <map>
#include <random>

using namespace qmink;

namespace {

constexpr int kTrials = 60;

struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

  Scalar scalar() {
    return Scalar(mpq_class(integer(-9, 9), integer(1, 6)), mpq_class(integer(-9, 9), integer(1, 6)));
  }

  Scalar nonzero() {
    for (;;)
      if (Scalar s = scalar(); !s.is_zero())
        return s;
  }

  Mat mat(size_t r, size_t c, int density = 3) {
    Mat m(r, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j)
        if (integer(0, density) == 0)
          m(i, j) = scalar();
    return m;
  }

  Word word(size_t gens, size_t max_len) {
    const size_t len = static_cast<size_t>(integer(0, static_cast<long>(max_len)));
    std::vector<Letter> l;
    for (size_t i = 0; i < len; ++i)
      l.push_back(static_cast<Letter>(integer(0, static_cast<long>(gens) - 1)));
    return Word(l);
  }

  NCPoly poly(size_t gens, size_t max_len, int terms = 4) {
    NCPoly p;
    for (int t = 0; t < terms; ++t)
      p.add(word(gens, max_len), scalar());
    return p;
  }
};

PoincareInstance constant_commutator(Gen &g) {
  PoincareInstance c = builtin("classical");
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j)
      if (g.integer(0, 1)) {
        const Scalar v = g.scalar();
        c.T(4 * i + j, 0) = v;
        c.T(4 * j + i, 0) = -v;
      }
  return c;
}

} // namespace

TEST(Property, FieldAxioms) {
  Gen g(11);
  for (int t = 0; t < kTrials * 5; ++t) {
    const Scalar a = g.scalar(), b = g.scalar(), c = g.scalar();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), Scalar(1));
    }
    EXPECT_EQ(Scalar::parse(a.to_string()), a);
  }
}

TEST(Property, KronMixedProductAndFlip) {
  Gen g(12);
  for (int t = 0; t < kTrials / 3; ++t) {
    const size_t m = g.integer(1, 3), n = g.integer(1, 3);
    const Mat a = g.mat(m, m, 1), b = g.mat(n, n, 1), c = g.mat(m, m, 1), d = g.mat(n, n, 1);
    EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
    EXPECT_EQ(flip(m, n) * kron(a, b), kron(b, a) * flip(m, n));
    EXPECT_EQ(flip(n, m) * flip(m, n), Mat::identity(m * n));
    EXPECT_EQ((a * c).adjoint(), c.adjoint() * a.adjoint());
  }
}

TEST(Property, FreeAlgebraLaws) {
  Gen g(13);
  for (int t = 0; t < kTrials; ++t) {
    const NCPoly a = g.poly(4, 3), b = g.poly(4, 3), c = g.poly(4, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(mink_star(a * b), mink_star(b) * mink_star(a));
    EXPECT_EQ(mink_star(mink_star(a)), a);
    const NCPoly u = g.poly(8, 3), v = g.poly(8, 3);
    EXPECT_EQ(lorentz_star(lorentz_star(u)), u);
    EXPECT_EQ(lorentz_star(u * v), lorentz_star(v) * lorentz_star(u));
  }
}

TEST(Property, NormalFormIsMultiplicative) {
  Gen g(14);
  const MinkowskiAlgebra classical = make_minkowski(builtin("classical"), 4);
  const MinkowskiAlgebra deformed = make_minkowski(constant_commutator(g), 4);
  for (const MinkowskiAlgebra *alg : {&classical, &deformed}) {
    const TruncatedQuotient &q = alg->quotient;
    for (int t = 0; t < kTrials; ++t) {
      const NCPoly a = g.poly(4, 2), b = g.poly(4, 2);
      const NCPoly nab = q.normal_form(a * b);
      EXPECT_EQ(nab, q.normal_form(q.normal_form(a) * q.normal_form(b)));
      EXPECT_EQ(q.normal_form(nab), nab);
      EXPECT_EQ(q.normal_form(a + b), q.normal_form(a) + q.normal_form(b));
    }
  }
}

TEST(Property, RelationOrderIndependence) {
  Gen g(15);
  for (int t = 0; t < 4; ++t) {
    const PoincareInstance inst = constant_commutator(g);
    std::vector<NCPoly> rels = mink_relations(inst);
    const TruncatedQuotient base(4, rels, 3);
    std::shuffle(rels.begin(), rels.end(), g.rng);
    // Rescale and recombine: the ideal is unchanged.
    rels[0] = rels[0] * g.nonzero() + rels[1];
    const TruncatedQuotient other(4, rels, 3);
    EXPECT_EQ(other.nf_basis(), base.nf_basis());
    for (int k = 0; k < 20; ++k) {
      const NCPoly p = g.poly(4, 3);
      EXPECT_EQ(other.normal_form(p), base.normal_form(p));
    }
  }
}

TEST(Property, ConstantCommutatorSpacesArePbwWithCalculus) {
  Gen g(16);
  for (int t = 0; t < 5; ++t) {
    const PoincareInstance inst = constant_commutator(g);
    EXPECT_TRUE(f_tilde(inst).is_zero());
    EXPECT_TRUE(pbw_check(make_minkowski(inst, 3), 3).pass);
  }
}

TEST(Property, InstanceRoundTrip) {
  Gen g(17);
  for (int t = 0; t < 10; ++t) {
    PoincareInstance p;
    p.name = "random " + std::to_string(t);
    p.q = g.integer(0, 1) ? 1 : -1;
    p.s = g.integer(0, 1) ? 1 : -1;
    p.E = g.mat(4, 1);
    p.Eprime = g.mat(1, 4);
    p.X = Mat::identity(4);
    for (size_t r = 0; r < 4; ++r)
      for (size_t c = r + 1; c < 4; ++c)
        p.X(r, c) = g.scalar();
    p.R = g.mat(16, 16, 6);
    p.Z = g.mat(16, 4);
    p.T = g.mat(16, 1);
    p.T(0, 0) = Scalar(mpq_class("98765432109876543210987654321/3"));
    EXPECT_EQ(parse_instance(instance_to_json(p)), p);
  }
}

TEST(Property, ClassicalYangBaxterForAnyB) {
  Gen g(18);
  const PoincareInstance c = builtin("classical");
  const MetricTensor m = metric(c);
  for (int t = 0; t < 10; ++t)
    EXPECT_TRUE(yang_baxter_check(build_rq(c, m, g.scalar())).pass);
}

TEST(Property, DeltaIsCoassociativeOnWords) {
  // (Delta (x) 1) Delta = (1 (x) Delta) Delta, compared on all three legs.
  Gen g(19);
  for (int t = 0; t < 20; ++t) {
    const BPoly p = g.poly(20, 2, 2);
    std::map<std::array<Word, 3>, Scalar> left, right;
    for (const auto &[legs, c] : delta_b(p)) {
      for (const auto &[l2, c2] : delta_b(BPoly(legs.first)))
        left[{l2.first, l2.second, legs.second}] += c * c2;
      for (const auto &[r2, c2] : delta_b(BPoly(legs.second)))
        right[{legs.first, r2.first, r2.second}] += c * c2;
    }
    std::erase_if(left, [](const auto &kv) { return kv.second.is_zero(); });
    std::erase_if(right, [](const auto &kv) { return kv.second.is_zero(); });
    EXPECT_EQ(left, right);
  }
}
