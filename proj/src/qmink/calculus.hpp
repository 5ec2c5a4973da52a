#pragma once

#include "qmink/metric.hpp"
#include "qmink/minkowski.hpp"

#include <array>
#include <map>
#include <mutex>
#include <string>

namespace qmink {

/// Obstruction tensor, a 64x4 matrix:
///   [(R-1)(x)1] { (1(x)Z)Z - (Z(x)1)Z + T(x)1 - (1(x)R)(R(x)1)(1(x)T) }
/// with Z : C^4 -> C^16 and T : C -> C^16.
Mat f_tilde(const PoincareInstance &inst);

/// A first-order form sum_i dx_i * coords[i] in right-module coordinates.
struct Form1 {
  std::array<NCPoly, 4> coords;
  friend bool operator==(const Form1 &, const Form1 &) = default;
  Form1 &operator+=(const Form1 &o);
  friend Form1 operator+(Form1 a, const Form1 &b) { return a += b; }
  bool is_zero() const;
};

/// The covariant first-order calculus on a Minkowski algebra. The bimodule
/// structure is x_i dx_j = R_{ij,kl} dx_k x_l + Z_{ij,k} dx_k.
class FirstOrderCalculus {
public:
  /// Throws CalculusObstruction when f_tilde(alg.instance) != 0.
  explicit FirstOrderCalculus(MinkowskiAlgebra alg);

  const MinkowskiAlgebra &algebra() const { return alg_; }
  const TruncatedQuotient &quotient() const { return alg_.quotient; }
  const MetricTensor &metric() const { return metric_; }

  /// d(x_i) = dx_i, d(1) = 0, extended by Leibniz with every dx pushed left.
  Form1 differential(const NCPoly &p) const;
  /// a * omega through the bimodule relation.
  Form1 left_multiply(const NCPoly &a, const Form1 &omega) const;
  /// omega * a.
  Form1 right_multiply(const Form1 &omega, const NCPoly &a) const;

  /// Recursion d_i(x_k a) = delta_ki a + (R_{kl,in} x_n + Z_{kl,i}) d_l(a).
  NCPoly partial(size_t i, const NCPoly &p) const;
  /// g_ij d_j d_i
  NCPoly box(const NCPoly &p) const;
  /// P_l = i d_l
  NCPoly momentum_lower(size_t l, const NCPoly &p) const;
  /// P^k = g_kl P_l
  NCPoly momentum(size_t k, const NCPoly &p) const;

private:
  NCPoly partial_word(size_t i, const Word &w) const;
  void check_degree(const NCPoly &p) const;

  MinkowskiAlgebra alg_;
  MetricTensor metric_;
  // x_i dx_j = sum_k dx_k * coeff_[i][j][k]
  std::array<std::array<std::array<NCPoly, 4>, 4>, 4> left_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<size_t, Word>, NCPoly> memo_;
};

FirstOrderCalculus make_calculus(const MinkowskiAlgebra &alg);

/// Outcome of an operator identity swept over the normal-form basis.
struct SweepResult {
  bool pass = true;
  size_t cases = 0;
  std::string witness; // first failing case
};

/// d_l d_k = R_{ij,kl} d_j d_i on every basis word of degree <= n.
SweepResult check_partial_exchange(const FirstOrderCalculus &c, size_t n);
/// da = sum_i dx_i d_i(a).
SweepResult check_differential_partials(const FirstOrderCalculus &c, size_t n);
/// d(ab) = a db + (da) b for basis pairs with deg a + deg b <= n.
SweepResult check_leibniz(const FirstOrderCalculus &c, size_t n);
/// [box, d_i] = 0.
SweepResult check_box_commutes(const FirstOrderCalculus &c, size_t n);
/// d and d_i annihilate u r v, and r * dx_j = 0, for every relation r.
SweepResult check_ideal_compatibility(const FirstOrderCalculus &c, size_t n);

} // namespace qmink
