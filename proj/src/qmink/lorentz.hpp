#pragma once

#include "qmink/instance.hpp"
#include "qmink/metric.hpp"
#include "qmink/quotient.hpp"

#include <array>
#include <string>
#include <vector>

namespace qmink {

/// Letters 0..3 are w_AB at 2A+B, letters 4..7 are wbar_AB at 4+2A+B.
inline constexpr Letter w_letter(size_t A, size_t B) { return static_cast<Letter>(2 * A + B); }
inline constexpr Letter wbar_letter(size_t A, size_t B) {
  return static_cast<Letter>(4 + 2 * A + B);
}
std::string lorentz_name(Letter l);
/// w_AB^* = wbar_AB and back.
NCPoly lorentz_star(const NCPoly &p);

struct LorentzAlgebra {
  TruncatedQuotient quotient;
};

/// (w(x)w)E - E, E'(w(x)w) - E', X(w(x)wbar) - (wbar(x)w)X and the stars of
/// all 24 of them.
std::vector<NCPoly> lorentz_relations(const PoincareInstance &inst);
LorentzAlgebra make_lorentz(const PoincareInstance &inst, size_t cap = 4);

/// Square matrix with algebra-valued entries.
class PolyMat {
public:
  explicit PolyMat(size_t n = 0) : n_(n), entries_(n * n) {}
  size_t size() const { return n_; }
  NCPoly &operator()(size_t r, size_t c) { return entries_[r * n_ + c]; }
  const NCPoly &operator()(size_t r, size_t c) const { return entries_[r * n_ + c]; }

  friend PolyMat operator*(const PolyMat &a, const PolyMat &b);
  friend PolyMat operator*(const Mat &a, const PolyMat &b);
  friend PolyMat operator*(const PolyMat &a, const Mat &b);
  friend PolyMat operator-(const PolyMat &a, const PolyMat &b);

private:
  size_t n_;
  std::vector<NCPoly> entries_;
};

/// (v(x)z)_{(ij),(kl)} = v_ik z_jl, first factor on the left.
PolyMat tensor(const PolyMat &v, const PolyMat &z);
PolyMat w_matrix();
PolyMat wbar_matrix();

/// Lambda = V^-1 (w (x) wbar) V.
PolyMat lambda_entries();

struct InvarianceResult {
  bool pass = true;
  /// normal_form(sum_kl Lambda_ik g_kl Lambda_jl - g_ij)
  std::array<std::array<NCPoly, 4>, 4> residual;
  std::string witness;
};

/// Requires a quotient cap of at least 4.
InvarianceResult lambda_invariance_check(const LorentzAlgebra &alg, const Mat &g);

/// Diagnostic: star(Lambda_ij) == Lambda_ij modulo relations.
bool lambda_is_real(const LorentzAlgebra &alg);

} // namespace qmink
