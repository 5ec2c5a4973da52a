#include "qmink/minkowski.hpp"

#include "qmink/errors.hpp"

namespace qmink {

std::string coordinate_name(Letter l) { return "x" + std::to_string(l); }

std::vector<NCPoly> mink_relations(const PoincareInstance &inst) {
  const Mat rm = inst.R - Mat::identity(16);
  const Mat linear = rm * inst.Z;
  const Mat constant = rm * inst.T;
  std::vector<NCPoly> out;
  for (size_t row = 0; row < 16; ++row) {
    NCPoly rel;
    for (Letter k = 0; k < 4; ++k)
      for (Letter l = 0; l < 4; ++l)
        rel.add(Word{k, l}, rm(row, 4 * k + l));
    for (Letter k = 0; k < 4; ++k)
      rel.add(Word{k}, -linear(row, k));
    rel.add(Word{}, constant(row, 0));
    if (!rel.is_zero())
      out.push_back(std::move(rel));
  }
  return out;
}

MinkowskiAlgebra make_minkowski(const PoincareInstance &inst, size_t cap) {
  return MinkowskiAlgebra{inst, TruncatedQuotient(4, mink_relations(inst), cap)};
}

NCPoly mink_star(const NCPoly &p) {
  return p.star([](Letter l) { return l; });
}

PbwResult pbw_check(const MinkowskiAlgebra &alg, size_t n) {
  if (n > alg.quotient.degree_cap())
    throw DegreeError("pbw degree exceeds the quotient degree cap");
  PbwResult res;
  auto profile = alg.quotient.dimension_profile();
  res.profile.assign(profile.begin(), profile.begin() + static_cast<long>(n) + 1);
  res.expected = commutative_profile(n);
  res.pass = res.profile == res.expected;
  return res;
}

std::vector<size_t> star_closure_failures(const MinkowskiAlgebra &alg) {
  std::vector<size_t> bad;
  const auto &rels = alg.quotient.relations();
  for (size_t k = 0; k < rels.size(); ++k)
    if (!alg.quotient.normal_form(mink_star(rels[k])).is_zero())
      bad.push_back(k);
  return bad;
}

} // namespace qmink
