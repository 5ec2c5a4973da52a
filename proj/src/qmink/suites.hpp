#pragma once

#include "qmink/instance.hpp"

#include <string>
#include <vector>

namespace qmink {

struct SuiteOptions {
  /// 0 selects the suite default (4, or 3 for dirac).
  size_t degree = 0;
  Scalar b{0};
  Scalar k{1};
  size_t fock_n = 2;
};

struct SuiteDetail {
  std::string check;
  bool pass = false;
  /// Non-gating details are informational and never fail the suite.
  bool gate = true;
  std::string residual;
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::vector<SuiteDetail> details;
  double seconds = 0;
};

struct Report {
  std::string instance;
  std::vector<SuiteResult> suites;
  bool pass = false;
};

inline constexpr size_t kMinDegree = 2;
inline constexpr size_t kMaxDegree = 6;
inline constexpr size_t kMaxFockSlots = 4;

/// validate, pbw, calculus, dirac, lorentz, braiding, fock.
const std::vector<std::string> &suite_names();

/// Throws Error on bad options; check failures become details.
SuiteResult run_suite(const std::string &name, const PoincareInstance &inst,
                      const SuiteOptions &opts);

/// `name` is a suite name or "report" for all of them.
Report run_report(const std::string &name, const PoincareInstance &inst,
                  const SuiteOptions &opts);

std::string report_text(const Report &r, bool timings = false);
std::string report_json(const Report &r, bool timings = false);

} // namespace qmink
