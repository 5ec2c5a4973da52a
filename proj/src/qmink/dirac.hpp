#pragma once

#include "qmink/calculus.hpp"

#include <array>
#include <string>

namespace qmink {

/// gamma_i = [[0, b A_i], [a sigma_i, 0]] with
/// A_i = q^{-1/2} E^T (sigma_i o D) E, D = tau X^-1 tau and E read as 2x2.
struct GammaSet {
  std::array<Mat, 4> gammas;
  std::array<Mat, 4> A;
};

/// a = b = 1.
GammaSet gamma(const PoincareInstance &inst);
/// Free normalization constants; only ab = 1 gives a Dirac square root of box.
GammaSet gamma_scaled(const PoincareInstance &inst, const Scalar &a, const Scalar &b);

struct CliffordResult {
  bool pass = true;
  /// residual(i, j) = gamma_i gamma_j + R_{ji,lk} gamma_k gamma_l - 2 g_ji 1
  std::array<std::array<Mat, 4>, 4> residual;
  std::string witness;
};

CliffordResult clifford_check(const PoincareInstance &inst, const GammaSet &gs);
CliffordResult clifford_check(const PoincareInstance &inst, const GammaSet &gs,
                              const MetricTensor &g);

/// A bispinor phi = sum_a e_a (x) components[a].
struct Bispinor {
  std::array<NCPoly, 4> components;
  friend bool operator==(const Bispinor &, const Bispinor &) = default;
};

/// (Dphi)_a = sum_{i,b} (gamma_i)_{ab} d_i(phi_b)
Bispinor dirac_apply(const FirstOrderCalculus &c, const GammaSet &gs, const Bispinor &phi);

/// D(D phi) == box(phi) componentwise for phi = e_a (x) w over basis words of
/// degree <= n.
SweepResult dirac_square_check(const FirstOrderCalculus &c, const GammaSet &gs, size_t n);

} // namespace qmink
