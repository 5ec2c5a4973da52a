#pragma once

#include "qmink/mat.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace qmink {

/// Defining data of one quantum Poincare group and its Minkowski space.
///   E 4x1, Eprime 1x4, X 4x4 : the quantum Lorentz group relations
///   R 16x16, Z 16x4, T 16x1  : the Minkowski relations (R-1)(x(x)x - Zx + T) = 0
/// R is read with (ij) as row and (kl) as column under the pair index.
struct PoincareInstance {
  std::string name;
  Scalar q{1};
  Scalar s{1};
  Mat E{4, 1};
  Mat Eprime{1, 4};
  Mat X{4, 4};
  Mat R{16, 16};
  Mat Z{16, 4};
  Mat T{16, 1};

  friend bool operator==(const PoincareInstance &, const PoincareInstance &) = default;
};

/// Shape, parameter and invertibility constraints; throws ShapeError or
/// ConstraintError.
void check_instance(const PoincareInstance &inst);

/// q^{1/2} on the fixed branch: 1 for q = 1, i for q = -1.
Scalar sqrt_q(const PoincareInstance &inst);

PoincareInstance parse_instance(std::string_view json_text);
PoincareInstance load_instance(const std::filesystem::path &path);
std::string instance_to_json(const PoincareInstance &inst);
void write_instance(const PoincareInstance &inst, const std::filesystem::path &path);

/// Built-in instances; currently only "classical".
PoincareInstance builtin(std::string_view name);

struct ValidationCheck {
  std::string name;
  bool pass = false;
  /// A failing warning does not fail the report.
  bool warning_only = false;
  std::string residual;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool overall = false;
};

ValidationReport validate_instance(const PoincareInstance &inst);

} // namespace qmink
