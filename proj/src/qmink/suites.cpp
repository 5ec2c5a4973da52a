#include "qmink/suites.hpp"

#include "qmink/braiding.hpp"
#include "qmink/calculus.hpp"
#include "qmink/dirac.hpp"
#include "qmink/errors.hpp"
#include "qmink/fock.hpp"
#include "qmink/lorentz.hpp"

#include <chrono>
#include <future>
#include <sstream>

#include <json.hpp>

namespace qmink {

namespace {

std::string join(const std::vector<size_t> &v) {
  std::string out;
  for (size_t x : v)
    out += (out.empty() ? "" : ",") + std::to_string(x);
  return "[" + out + "]";
}

std::string sweep_residual(const SweepResult &s) {
  return s.pass ? "0 over " + std::to_string(s.cases) + " cases" : s.witness;
}

SuiteDetail sweep_detail(std::string check, const SweepResult &s) {
  return {std::move(check), s.pass, true, sweep_residual(s)};
}

std::string zero_or(const std::string &witness) { return witness.empty() ? "0" : witness; }

size_t pick_degree(const SuiteOptions &o, size_t fallback) { return o.degree ? o.degree : fallback; }

void suite_validate(const PoincareInstance &inst, const SuiteOptions &, SuiteResult &out) {
  for (const auto &c : validate_instance(inst).checks)
    out.details.push_back({c.name, c.pass, !c.warning_only, zero_or(c.residual)});
}

void suite_pbw(const PoincareInstance &inst, const SuiteOptions &o, SuiteResult &out) {
  const size_t n = pick_degree(o, kDefaultDegreeCap);
  const MinkowskiAlgebra alg = make_minkowski(inst, n);
  const PbwResult p = pbw_check(alg, n);
  out.details.push_back({"dimension_profile", p.pass, true,
                         join(p.profile) + (p.pass ? "" : " expected " + join(p.expected))});
  const auto bad = star_closure_failures(alg);
  out.details.push_back({"star_closed", bad.empty(), false,
                         bad.empty() ? "0" : "relations " + join(bad)});
}

bool calculus_gate(const PoincareInstance &inst, SuiteResult &out) {
  const Mat f = f_tilde(inst);
  out.details.push_back({"f_tilde_zero", f.is_zero(), true, zero_or(f.is_zero() ? "" : f.witness())});
  return f.is_zero();
}

void suite_calculus(const PoincareInstance &inst, const SuiteOptions &o, SuiteResult &out) {
  if (!calculus_gate(inst, out))
    return;
  const size_t n = pick_degree(o, kDefaultDegreeCap);
  const FirstOrderCalculus c(make_minkowski(inst, n));
  out.details.push_back(sweep_detail("d_equals_dx_partial", check_differential_partials(c, n)));
  out.details.push_back(sweep_detail("leibniz", check_leibniz(c, n)));
  out.details.push_back(sweep_detail("partial_exchange", check_partial_exchange(c, n)));
  out.details.push_back(sweep_detail("box_commutes", check_box_commutes(c, n)));
  out.details.push_back(sweep_detail("ideal_compatible", check_ideal_compatibility(c, n)));
}

void suite_dirac(const PoincareInstance &inst, const SuiteOptions &o, SuiteResult &out) {
  const MetricTensor g = metric(inst);
  out.details.push_back({"metric", true, false, g.g.to_string()});
  out.details.push_back({"metric_hermitian", g.hermitian, true, g.hermitian ? "0" : g.g.to_string()});
  out.details.push_back({"metric_nondegenerate", !g.degenerate, true,
                         g.degenerate ? "rank " + std::to_string(g.g.rank()) : "0"});

  const GammaSet gs = gamma(inst);
  const CliffordResult cl = clifford_check(inst, gs, g);
  out.details.push_back({"clifford", cl.pass, true, zero_or(cl.witness)});

  if (!calculus_gate(inst, out))
    return;
  const size_t n = pick_degree(o, 3);
  const FirstOrderCalculus c(make_minkowski(inst, n));
  const SweepResult sq = dirac_square_check(c, gs, n);
  out.details.push_back(sweep_detail("dirac_square", sq));

  // ab = 2 must break both sides of the equivalence together.
  const GammaSet off = gamma_scaled(inst, 2, 1);
  const bool cl_off = clifford_check(inst, off, g).pass;
  const bool sq_off = dirac_square_check(c, off, n).pass;
  out.details.push_back({"equivalence_control_ab2", cl_off == sq_off && !cl_off, true,
                         std::string("clifford ") + (cl_off ? "pass" : "fail") + ", dirac_square " +
                             (sq_off ? "pass" : "fail")});
}

void suite_lorentz(const PoincareInstance &inst, const SuiteOptions &, SuiteResult &out) {
  const LorentzAlgebra alg = make_lorentz(inst, 4);
  const std::vector<size_t> prof = alg.quotient.dimension_profile();
  out.details.push_back({"dimension_profile", true, false, join(prof)});
  const MetricTensor g = metric(inst);
  const InvarianceResult inv = lambda_invariance_check(alg, g.g);
  out.details.push_back({"lambda_invariance", inv.pass, true, zero_or(inv.witness)});
  const InvarianceResult ctl = lambda_invariance_check(alg, Mat::identity(4));
  out.details.push_back({"identity_metric_not_invariant", !ctl.pass, false, zero_or(ctl.witness)});
  const bool real = lambda_is_real(alg);
  out.details.push_back({"lambda_real", real, false, real ? "0" : "star(Lambda) != Lambda"});
}

void suite_braiding(const PoincareInstance &inst, const SuiteOptions &o, SuiteResult &out) {
  const CqtEvaluator ev(inst, o.b, o.k);
  out.details.push_back({"rq_invertible", ev.rq().is_invertible(), true,
                         ev.rq().is_invertible() ? "0" : "rank " + std::to_string(ev.rq().rank())});
  const YangBaxterResult yb = yang_baxter_check(ev.rq());
  out.details.push_back({"yang_baxter", yb.pass, true, yb.residual});
  const Mat rebuilt = reconstruct_rpp(ev);
  const Mat diff = rebuilt - ev.rq();
  out.details.push_back({"dictionary_closure", diff.is_zero(), true, diff.witness()});
  const CqtCheckResult pl = product_law_check(ev);
  out.details.push_back({"product_laws", pl.pass, true, zero_or(pl.witness)});
  const CqtCheckResult st = star_cqt_check(ev);
  out.details.push_back({"star_cqt", st.pass, false, zero_or(st.witness)});
  const CqtCheckResult ct = ct_check(ev);
  out.details.push_back({"cotriangular", ct.pass, false, zero_or(ct.witness)});

  const LorentzAlgebra lor = make_lorentz(inst, 2);
  for (const auto &r : lorentz_intertwiner_check(lor, lorentz_r_blocks(inst, o.k)))
    out.details.push_back({"intertwiner " + r.pair, r.pass, true, zero_or(r.witness)});
}

CTensor generator_tensor(const MinkowskiAlgebra &alg, const std::vector<Letter> &letters) {
  std::vector<NCPoly> f;
  for (Letter l : letters)
    f.push_back(NCPoly::gen(l));
  return CTensor::product(alg, f);
}

void suite_fock(const PoincareInstance &inst, const SuiteOptions &o, SuiteResult &out) {
  const CqtEvaluator ev(inst, o.b, o.k);
  const CqtCheckResult ct = ct_check(ev);
  out.details.push_back({"cotriangular", ct.pass, true, zero_or(ct.witness)});
  if (!ct.pass)
    return;
  const MinkowskiAlgebra alg = make_minkowski(inst, kDefaultDegreeCap);

  bool square = true, flip = true;
  std::string square_w, flip_w;
  for (Letter a = 0; a < 4; ++a)
    for (Letter b = 0; b < 4; ++b) {
      const CTensor t = generator_tensor(alg, {a, b});
      const CTensor kt = interchange_k(ev, alg, t);
      if (square && !(interchange_k(ev, alg, kt) == t)) {
        square = false;
        square_w = "x" + std::to_string(a) + " (x) x" + std::to_string(b);
      }
      if (flip && !(kt == generator_tensor(alg, {b, a}))) {
        flip = false;
        flip_w = "K(x" + std::to_string(a) + " (x) x" + std::to_string(b) + ") = " + kt.to_string();
      }
    }
  out.details.push_back({"k_squared_identity", square, true, zero_or(square_w)});
  out.details.push_back({"k_is_flip", flip, false, zero_or(flip_w)});

  bool braid = true;
  std::string braid_w;
  for (Letter a = 0; a < 4 && braid; ++a)
    for (Letter b = 0; b < 4 && braid; ++b)
      for (Letter c = 0; c < 4 && braid; ++c) {
        const CTensor t = generator_tensor(alg, {a, b, c});
        if (!(braid_action_word(ev, alg, {0, 1, 0}, t) == braid_action_word(ev, alg, {1, 0, 1}, t))) {
          braid = false;
          braid_w = "x" + std::to_string(a) + " (x) x" + std::to_string(b) + " (x) x" +
                    std::to_string(c);
        }
      }
  out.details.push_back({"braid_relation", braid, true, zero_or(braid_w)});

  // Test tensors with n slots: cyclic generator patterns and one quadratic slot.
  const size_t n = o.fock_n;
  std::vector<CTensor> samples;
  for (Letter shift = 0; shift < 4; ++shift) {
    std::vector<Letter> letters;
    for (size_t m = 0; m < n; ++m)
      letters.push_back(static_cast<Letter>((shift + m * (shift + 1)) % 4));
    samples.push_back(generator_tensor(alg, letters));
  }
  {
    std::vector<NCPoly> f{NCPoly::gen(1) * NCPoly::gen(0) + NCPoly::gen(3)};
    for (size_t m = 1; m < n; ++m)
      f.push_back(NCPoly::gen(static_cast<Letter>(m % 4)));
    samples.push_back(CTensor::product(alg, f));
  }

  bool idem = true, fixed = true, lift_id = true, lift_sym = true;
  std::string idem_w, fixed_w, lift_id_w, lift_sym_w;
  const SingleParticleOp ident = [](const NCPoly &p) { return p; };
  const FirstOrderCalculus calc(alg);
  const SingleParticleOp d0 = [&calc](const NCPoly &p) { return calc.partial(0, p); };
  for (size_t idx = 0; idx < samples.size(); ++idx) {
    const std::string tag = "sample " + std::to_string(idx);
    const CTensor s = symmetrize(ev, alg, samples[idx], kMaxFockSlots);
    if (idem && !(symmetrize(ev, alg, s, kMaxFockSlots) == s)) {
      idem = false;
      idem_w = tag;
    }
    for (size_t m = 0; m + 1 < n && fixed; ++m)
      if (!(interchange_at(ev, alg, s, m) == s)) {
        fixed = false;
        fixed_w = tag + " slot " + std::to_string(m);
      }
    if (lift_id && !(lift_operator(ev, alg, ident, n, s, kMaxFockSlots) == s * Scalar(long(n)))) {
      lift_id = false;
      lift_id_w = tag;
    }
    const CTensor lifted = lift_operator(ev, alg, d0, n, s, kMaxFockSlots);
    if (lift_sym && !(symmetrize(ev, alg, lifted, kMaxFockSlots) == lifted)) {
      lift_sym = false;
      lift_sym_w = tag + ": " + lifted.to_string();
    }
  }
  const std::string count = std::to_string(samples.size()) + " tensors of " + std::to_string(n) + " slots";
  out.details.push_back({"symmetrize_idempotent", idem, true, idem ? "0 over " + count : idem_w});
  out.details.push_back({"boson_fixed", fixed, true, fixed ? "0 over " + count : fixed_w});
  out.details.push_back({"lift_identity", lift_id, true, lift_id ? "0 over " + count : lift_id_w});
  out.details.push_back({"lift_partial0_symmetric", lift_sym, true,
                         lift_sym ? "0 over " + count : lift_sym_w});
}

using SuiteFn = void (*)(const PoincareInstance &, const SuiteOptions &, SuiteResult &);

SuiteFn suite_fn(const std::string &name) {
  if (name == "validate") return suite_validate;
  if (name == "pbw") return suite_pbw;
  if (name == "calculus") return suite_calculus;
  if (name == "dirac") return suite_dirac;
  if (name == "lorentz") return suite_lorentz;
  if (name == "braiding") return suite_braiding;
  if (name == "fock") return suite_fock;
  return nullptr;
}

void check_options(const SuiteOptions &o) {
  if (o.degree != 0 && (o.degree < kMinDegree || o.degree > kMaxDegree))
    throw DegreeError("degree must be between " + std::to_string(kMinDegree) + " and " +
                      std::to_string(kMaxDegree));
  if (!(o.k == Scalar(1) || o.k == Scalar(-1)))
    throw ConstraintError("k must be 1 or -1");
  if (o.fock_n < 1 || o.fock_n > kMaxFockSlots)
    throw ShapeError("fock n must be between 1 and " + std::to_string(kMaxFockSlots));
}

} // namespace

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"validate", "pbw",      "calculus", "dirac",
                                              "lorentz",  "braiding", "fock"};
  return names;
}

SuiteResult run_suite(const std::string &name, const PoincareInstance &inst,
                      const SuiteOptions &opts) {
  SuiteFn fn = suite_fn(name);
  if (!fn)
    throw Error("unknown suite: " + name);
  check_options(opts);
  SuiteResult out;
  out.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    fn(inst, opts, out);
  } catch (const Error &e) {
    out.details.push_back({"error", false, true, e.what()});
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.pass = !out.details.empty();
  for (const auto &d : out.details)
    if (d.gate && !d.pass)
      out.pass = false;
  return out;
}

Report run_report(const std::string &name, const PoincareInstance &inst,
                  const SuiteOptions &opts) {
  check_options(opts);
  Report r;
  r.instance = inst.name;
  if (name == "report") {
    std::vector<std::future<SuiteResult>> jobs;
    for (const auto &s : suite_names())
      jobs.push_back(std::async(std::launch::async, [&, s] { return run_suite(s, inst, opts); }));
    for (auto &j : jobs)
      r.suites.push_back(j.get());
  } else {
    r.suites.push_back(run_suite(name, inst, opts));
  }
  r.pass = true;
  for (const auto &s : r.suites)
    r.pass = r.pass && s.pass;
  return r;
}

std::string report_text(const Report &r, bool timings) {
  std::ostringstream os;
  os << "instance: " << r.instance << "\n";
  for (const auto &s : r.suites) {
    os << "\n[" << (s.pass ? "PASS" : "FAIL") << "] " << s.name;
    if (timings)
      os << " (" << s.seconds << " s)";
    os << "\n";
    for (const auto &d : s.details)
      os << "  " << (d.pass ? "pass" : "FAIL") << (d.gate ? "  " : "  (info) ") << d.check << ": "
         << d.residual << "\n";
  }
  os << "\noverall: " << (r.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string report_json(const Report &r, bool timings) {
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  for (const auto &s : r.suites) {
    nlohmann::ordered_json details = nlohmann::ordered_json::array();
    for (const auto &d : s.details)
      details.push_back(
          {{"check", d.check}, {"pass", d.pass}, {"gate", d.gate}, {"residual", d.residual}});
    nlohmann::ordered_json js{{"name", s.name}, {"pass", s.pass}, {"details", details}};
    if (timings)
      js["seconds"] = s.seconds;
    suites.push_back(js);
  }
  nlohmann::ordered_json out{{"instance", r.instance}, {"suites", suites}, {"pass", r.pass}};
  return out.dump(2) + "\n";
}

} // namespace qmink
