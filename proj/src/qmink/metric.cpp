#include "qmink/metric.hpp"

namespace qmink {

MetricTensor metric(const PoincareInstance &inst) {
  const Mat vinv = spinor_vector_map().inverse();
  const Mat tau_e = flip(2, 2) * inst.E;
  const Mat vec = Scalar(-2) * sqrt_q(inst) * kron(vinv, vinv) * middle_embed(inst.X) *
                  kron(inst.E, tau_e);
  MetricTensor out;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j)
      out.g(i, j) = vec(4 * i + j, 0);
  out.hermitian = out.g.adjoint() == out.g;
  out.degenerate = !out.g.is_invertible();
  return out;
}

} // namespace qmink
