#pragma once

#include "qmink/instance.hpp"
#include "qmink/quotient.hpp"

#include <string>
#include <vector>

namespace qmink {

inline constexpr size_t kDefaultDegreeCap = 4;

/// Coordinate algebra C generated by x0..x3 (letters 0..3).
struct MinkowskiAlgebra {
  PoincareInstance instance;
  TruncatedQuotient quotient;
};

std::string coordinate_name(Letter l);

/// One relation per nonzero row (ij) of (R - 1)(x(x)x - Zx + T).
std::vector<NCPoly> mink_relations(const PoincareInstance &inst);

MinkowskiAlgebra make_minkowski(const PoincareInstance &inst, size_t cap = kDefaultDegreeCap);

/// x_i^* = x_i: reverse words, conjugate coefficients.
NCPoly mink_star(const NCPoly &p);

struct PbwResult {
  bool pass = false;
  std::vector<size_t> profile;
  std::vector<size_t> expected;
};

/// Compares the profile up to degree n with C(m+3, 3).
PbwResult pbw_check(const MinkowskiAlgebra &alg, size_t n);

/// Relations whose star does not reduce to zero (empty when star-closed).
std::vector<size_t> star_closure_failures(const MinkowskiAlgebra &alg);

} // namespace qmink
