#pragma once

#include "qmink/instance.hpp"
#include "qmink/lorentz.hpp"
#include "qmink/metric.hpp"
#include "qmink/ncpoly.hpp"

#include <map>
#include <shared_mutex>
#include <string>
#include <utility>

namespace qmink {

// ---------------------------------------------------------------------------
// Poincare words.
//
// The fundamental representation P = [[Lambda, y], [0, I]] is 5x5. Free words
// over its matrix elements represent elements of the Poincare algebra; no
// relations are applied. Letters 0..15 are Lambda_ij at 4i+j, letters 16..19
// are y_i.
// ---------------------------------------------------------------------------

using BPoly = NCPoly;

inline constexpr Letter lambda_letter(size_t i, size_t j) { return static_cast<Letter>(4 * i + j); }
inline constexpr Letter y_letter(size_t i) { return static_cast<Letter>(16 + i); }
std::string poincare_name(Letter l);

/// Matrix element P_ab as a BPoly: Lambda_ab, y_a, I, or 0 for a = 4 > b.
BPoly p_entry(size_t a, size_t b);

/// Two-leg tensors of free Poincare words.
using BTensor = std::map<std::pair<Word, Word>, Scalar>;

/// Delta Lambda_ij = Lambda_ik (x) Lambda_kj, Delta y_i = y_i (x) I + Lambda_ij (x) y_j,
/// extended multiplicatively.
BTensor delta_b(const BPoly &p);
/// eps(Lambda_ij) = delta_ij, eps(y_i) = 0, eps(I) = 1.
Scalar counit(const BPoly &p);

// ---------------------------------------------------------------------------
// R_Q and the Yang-Baxter equation.
// ---------------------------------------------------------------------------

/// 25x25 on C^5 (x) C^5 (pair index 5a+b). In the block basis
/// (4(x)4 | 4(x)1 | 1(x)4 | 1(x)1):
///   [ R  Z  -RZ  (R-1)T + b g ]
///   [ 0  0   1        0       ]
///   [ 0  1   0        0       ]
///   [ 0  0   0        1       ]
Mat build_rq(const PoincareInstance &inst, const MetricTensor &g, const Scalar &b);

struct YangBaxterResult {
  bool pass = false;
  /// Nonzero entry of (W(x)1)(1(x)W)(W(x)1) - (1(x)W)(W(x)1)(1(x)W), or "0".
  std::string residual;
};

/// Throws ShapeError unless w is d^2 x d^2.
YangBaxterResult yang_baxter_check(const Mat &w);

// ---------------------------------------------------------------------------
// The coquasitriangular functional on free Poincare words.
// ---------------------------------------------------------------------------

/// Which table seeds R(P_jk (x) P_il). Direct reads (R_Q)_{(ij),(kl)};
/// Inverse reads R_Q^-1 for the R^{Pv} = (R^{vP})^-1 convention.
enum class RBase { Direct, Inverse };

/// Evaluates R on free words through
///   R(ab (x) c) = R(a (x) c1) R(b (x) c2),  R(a (x) cd) = R(a1 (x) d) R(a2 (x) c),
///   R(I (x) p) = R(p (x) I) = eps(p).
/// The memo table is the only mutable state and is guarded for concurrent use.
class CqtEvaluator {
public:
  CqtEvaluator(const PoincareInstance &inst, const Scalar &b, const Scalar &k = 1,
               RBase base = RBase::Direct);

  const PoincareInstance &instance() const { return inst_; }
  const Scalar &b() const { return b_; }
  const Scalar &k() const { return k_; }
  const MetricTensor &metric() const { return metric_; }
  const Mat &rq() const { return rq_; }

  Scalar r_eval(const BPoly &a, const BPoly &c) const;
  Scalar r_word(const Word &a, const Word &c) const;
  /// Splits a after `left_split` letters (or c after `right_split` letters
  /// when left_split is 0) at the top level only.
  Scalar r_word_split(const Word &a, const Word &c, size_t left_split, size_t right_split) const;

private:
  Scalar r_letters(Letter a, Letter c) const;
  Scalar split_left(const Word &a, const Word &c, size_t pos) const;
  Scalar split_right(const Word &a, const Word &c, size_t pos) const;

  PoincareInstance inst_;
  Scalar b_;
  Scalar k_;
  MetricTensor metric_;
  Mat rq_;
  Mat table_;
  mutable std::shared_mutex memo_mutex_;
  mutable std::map<std::pair<Word, Word>, Scalar> memo_;
};

/// R^{PP} rebuilt from r_eval on matrix-element pairs; equals the base table.
Mat reconstruct_rpp(const CqtEvaluator &ev);

struct CqtCheckResult {
  bool pass = false;
  std::string witness;
};

/// r_eval on two-letter words against the matrix laws
///   R^{P(x)P,P} = (R^{PP} (x) 1)(1 (x) R^{PP}),
///   R^{P,P(x)P} = (1 (x) R^{PP})(R^{PP} (x) 1).
CqtCheckResult product_law_check(const CqtEvaluator &ev);

/// conj(R(q* (x) p*)) == R(p (x) q) for all generators p, q in {Lambda_ij, y_i, I},
/// with Lambda_ij^* = Lambda_ij and y_i^* = y_i.
CqtCheckResult star_cqt_check(const CqtEvaluator &ev);
/// (R^{PP})^-1 == R^{PP}: the cotriangular condition at v = z = P.
CqtCheckResult ct_check(const CqtEvaluator &ev);
CqtCheckResult ct_check_matrix(const Mat &rpp);

// ---------------------------------------------------------------------------
// Lorentz-level blocks.
// ---------------------------------------------------------------------------

struct LorentzRBlocks {
  Mat ww;       // k L,           L = s q^{1/2} (1 + q E E')
  Mat wwbar;    // k X
  Mat wbarw;    // q k X^-1
  Mat wbarwbar; // k tau L tau
};

/// Throws ConstraintError for singular X or k not in {1, -1}.
LorentzRBlocks lorentz_r_blocks(const PoincareInstance &inst, const Scalar &k);

struct IntertwinerResult {
  std::string pair; // "w,w", "w,wbar", ...
  bool pass = false;
  std::string witness;
};

/// (z(x)v) R^{vz} == R^{vz} (v(x)z) for v, z in {w, wbar}, in the quotient.
std::vector<IntertwinerResult> lorentz_intertwiner_check(const LorentzAlgebra &alg,
                                                         const LorentzRBlocks &blocks);

} // namespace qmink
