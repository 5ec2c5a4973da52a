#include "qmink/dirac.hpp"

#include "qmink/errors.hpp"

namespace qmink {

GammaSet gamma_scaled(const PoincareInstance &inst, const Scalar &a, const Scalar &b) {
  check_instance(inst);
  const Mat tau = flip(2, 2);
  const Mat D = tau * inst.X.inverse() * tau;
  const Scalar inv_sqrt_q = sqrt_q(inst).inverse();
  Mat e2(2, 2);
  for (size_t A = 0; A < 2; ++A)
    for (size_t B = 0; B < 2; ++B)
      e2(A, B) = inst.E(2 * A + B, 0);

  GammaSet gs;
  for (size_t i = 0; i < 4; ++i) {
    Mat sd(2, 2);
    for (size_t K = 0; K < 2; ++K)
      for (size_t L = 0; L < 2; ++L)
        for (size_t A = 0; A < 2; ++A)
          for (size_t B = 0; B < 2; ++B)
            sd(K, L) += pauli(i)(A, B) * D(2 * A + B, 2 * K + L);
    gs.A[i] = inv_sqrt_q * (e2.transpose() * sd * e2);

    Mat g(4, 4);
    for (size_t r = 0; r < 2; ++r)
      for (size_t s = 0; s < 2; ++s) {
        g(r, 2 + s) = b * gs.A[i](r, s);
        g(2 + r, s) = a * pauli(i)(r, s);
      }
    gs.gammas[i] = std::move(g);
  }
  return gs;
}

GammaSet gamma(const PoincareInstance &inst) { return gamma_scaled(inst, 1, 1); }

CliffordResult clifford_check(const PoincareInstance &inst, const GammaSet &gs) {
  return clifford_check(inst, gs, metric(inst));
}

CliffordResult clifford_check(const PoincareInstance &inst, const GammaSet &gs,
                              const MetricTensor &g) {
  std::array<std::array<Mat, 4>, 4> prod;
  for (size_t k = 0; k < 4; ++k)
    for (size_t l = 0; l < 4; ++l)
      prod[k][l] = gs.gammas[k] * gs.gammas[l];
  CliffordResult res;
  const Mat one = Mat::identity(4);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) {
      Mat r = prod[i][j] - Scalar(2) * g.g(j, i) * one;
      for (size_t l = 0; l < 4; ++l)
        for (size_t k = 0; k < 4; ++k) {
          const Scalar &c = inst.R(4 * j + i, 4 * l + k);
          if (!c.is_zero())
            r += c * prod[k][l];
        }
      if (!r.is_zero() && res.pass) {
        res.pass = false;
        res.witness = "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ") " + r.witness();
      }
      res.residual[i][j] = std::move(r);
    }
  return res;
}

Bispinor dirac_apply(const FirstOrderCalculus &c, const GammaSet &gs, const Bispinor &phi) {
  Bispinor out;
  for (size_t i = 0; i < 4; ++i)
    for (size_t b = 0; b < 4; ++b) {
      if (phi.components[b].is_zero())
        continue;
      NCPoly d = c.partial(i, phi.components[b]);
      if (d.is_zero())
        continue;
      for (size_t a = 0; a < 4; ++a)
        if (!gs.gammas[i](a, b).is_zero())
          out.components[a] += d * gs.gammas[i](a, b);
    }
  return out;
}

SweepResult dirac_square_check(const FirstOrderCalculus &c, const GammaSet &gs, size_t n) {
  SweepResult res;
  for (const auto &w : c.quotient().basis_up_to(n))
    for (size_t a = 0; a < 4; ++a) {
      Bispinor phi;
      phi.components[a] = NCPoly(w);
      Bispinor lhs = dirac_apply(c, gs, dirac_apply(c, gs, phi));
      Bispinor rhs;
      rhs.components[a] = c.box(phi.components[a]);
      ++res.cases;
      if (!(lhs == rhs) && res.pass) {
        res.pass = false;
        res.witness = "e" + std::to_string(a) + " (x) " + NCPoly(w).to_string(coordinate_name);
      }
    }
  return res;
}

} // namespace qmink
