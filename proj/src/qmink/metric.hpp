#pragma once

#include "qmink/instance.hpp"

namespace qmink {

struct MetricTensor {
  Mat g{4, 4};
  /// conj(g_ij) == g_ji
  bool hermitian = false;
  /// Singular g is reported, not thrown.
  bool degenerate = false;
};

/// g = -2 q^{1/2} (V^-1 (x) V^-1)(1 (x) X (x) 1)(E (x) tau E), with the
/// 16-vector read back as g_ij at index 4i + j.
MetricTensor metric(const PoincareInstance &inst);

} // namespace qmink
