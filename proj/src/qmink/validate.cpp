#include "qmink/calculus.hpp"
#include "qmink/errors.hpp"
#include "qmink/instance.hpp"
#include "qmink/metric.hpp"

namespace qmink {

namespace {

std::string shape_problem(const PoincareInstance &inst) {
  struct Expect {
    const char *name;
    const Mat &m;
    size_t rows, cols;
  };
  const Expect table[] = {{"E", inst.E, 4, 1},    {"Eprime", inst.Eprime, 1, 4},
                          {"X", inst.X, 4, 4},    {"R", inst.R, 16, 16},
                          {"Z", inst.Z, 16, 4},   {"T", inst.T, 16, 1}};
  for (const auto &e : table)
    if (e.m.rows() != e.rows || e.m.cols() != e.cols)
      return std::string(e.name) + " is " + std::to_string(e.m.rows()) + "x" +
             std::to_string(e.m.cols()) + ", expected " + std::to_string(e.rows) + "x" +
             std::to_string(e.cols);
  return {};
}

bool is_sign(const Scalar &v) { return v == Scalar(1) || v == Scalar(-1); }

} // namespace

ValidationReport validate_instance(const PoincareInstance &inst) {
  ValidationReport rep;
  auto add = [&](std::string name, bool pass, std::string residual, bool warning = false) {
    rep.checks.push_back({std::move(name), pass, warning, std::move(residual)});
  };

  const std::string shape = shape_problem(inst);
  add("shapes", shape.empty(), shape);
  add("q_is_sign", is_sign(inst.q), is_sign(inst.q) ? "" : "q=" + inst.q.to_string());
  add("s_is_sign", is_sign(inst.s), is_sign(inst.s) ? "" : "s=" + inst.s.to_string());
  if (shape.empty()) {
    const size_t rank = inst.X.rank();
    add("X_invertible", rank == 4, rank == 4 ? "" : "rank(X)=" + std::to_string(rank));

    const Mat f = f_tilde(inst);
    add("f_tilde_zero", f.is_zero(), f.is_zero() ? "" : "F~" + f.witness(), true);

    if (is_sign(inst.q)) {
      const MetricTensor g = metric(inst);
      add("metric_hermitian", g.hermitian, g.hermitian ? "" : "g=" + g.g.to_string());
      add("metric_nondegenerate", !g.degenerate,
          g.degenerate ? "rank(g)=" + std::to_string(g.g.rank()) : "");
    }
  }

  rep.overall = true;
  for (const auto &c : rep.checks)
    if (!c.pass && !c.warning_only)
      rep.overall = false;
  return rep;
}

} // namespace qmink
