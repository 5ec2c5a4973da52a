// One line per acceptance criterion; exit status is nonzero if any selected
// criterion fails. Usage: qmink_acceptance [N ...]
#include "qmink/braiding.hpp"
#include "qmink/dirac.hpp"
#include "qmink/errors.hpp"
#include "qmink/fock.hpp"
#include "qmink/lorentz.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

using namespace qmink;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void require(bool ok, const std::string &what) {
    if (!ok) {
      pass = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
};

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t) {
  return std::chrono::duration<double>(clock_type::now() - t).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

Mat diag(std::array<long, 4> d) {
  Mat m(4, 4);
  for (size_t i = 0; i < 4; ++i)
    m(i, i) = d[i];
  return m;
}

Outcome pbw_profile() {
  Outcome o;
  const auto t = clock_type::now();
  const MinkowskiAlgebra alg = make_minkowski(builtin("classical"), 4);
  const auto prof = alg.quotient.dimension_profile();
  const double s = seconds_since(t);
  o.require(prof == std::vector<size_t>{1, 4, 10, 20, 35}, "profile differs from [1,4,10,20,35]");
  o.require(prof.size() > 2 && prof[0] + prof[1] + prof[2] == 15, "degree <= 2 count is not 15");
  o.require(s < 10, "took " + fmt_seconds(s));
  if (o.pass)
    o.note = "[1,4,10,20,35] in " + fmt_seconds(s);
  return o;
}

Outcome calculus_gate() {
  Outcome o;
  const PoincareInstance cl = builtin("classical");
  o.require(f_tilde(cl).is_zero(), "F~(classical) != 0");

  PoincareInstance bad = cl;
  bad.name = "perturbed";
  bad.Z = Mat(16, 4);
  bad.R = flip(4, 4);
  bad.T = Mat(16, 1);
  bad.T(1, 0) = 1;  // (01)
  bad.T(4, 0) = -1; // (10)
  bad.T(11, 0) = Scalar(mpq_class(1, 2), 1);
  const Mat f = f_tilde(bad);
  o.require(!f.is_zero(), "perturbed F~ is exactly 0");
  bool threw = false;
  try {
    FirstOrderCalculus c(make_minkowski(bad, 2));
  } catch (const CalculusObstruction &) {
    threw = true;
  }
  o.require(threw, "no CalculusObstruction for the perturbed instance");
  return o;
}

Outcome calculus_identities() {
  Outcome o;
  const auto t = clock_type::now();
  const FirstOrderCalculus c(make_minkowski(builtin("classical"), 4));
  const std::pair<const char *, SweepResult> sweeps[] = {
      {"da = dx_i d_i(a)", check_differential_partials(c, 4)},
      {"Leibniz", check_leibniz(c, 4)},
      {"partial exchange", check_partial_exchange(c, 4)},
      {"[box, d_i] = 0", check_box_commutes(c, 4)},
  };
  const double s = seconds_since(t);
  size_t cases = 0;
  for (const auto &[name, r] : sweeps) {
    o.require(r.pass, std::string(name) + " fails at " + r.witness);
    o.require(r.cases > 0, std::string(name) + " swept nothing");
    cases += r.cases;
  }
  o.require(s < 30, "took " + fmt_seconds(s));
  if (o.pass)
    o.note = std::to_string(cases) + " cases in " + fmt_seconds(s);
  return o;
}

Outcome metric_and_gammas() {
  Outcome o;
  const PoincareInstance cl = builtin("classical");
  const MetricTensor g = metric(cl);
  o.require(g.g == diag({1, -1, -1, -1}), "g = " + g.g.to_string());
  const GammaSet gs = gamma(cl);
  for (size_t i = 0; i < 4; ++i) {
    Mat expected = pauli(i);
    if (i > 0)
      expected *= Scalar(-1);
    o.require(gs.A[i] == expected, "A_" + std::to_string(i) + " = " + gs.A[i].to_string());
  }
  const CliffordResult clr = clifford_check(cl, gs, g);
  o.require(clr.pass, "Clifford residual " + clr.witness);
  const FirstOrderCalculus c(make_minkowski(cl, 3));
  const SweepResult sq = dirac_square_check(c, gs, 3);
  o.require(sq.pass, "D^2 != box at " + sq.witness);

  const GammaSet off = gamma_scaled(cl, 2, 1);
  const bool cl_off = clifford_check(cl, off, g).pass;
  const bool sq_off = dirac_square_check(c, off, 3).pass;
  o.require(!cl_off && !sq_off, "ab = 2 control did not fail on both sides");
  return o;
}

Outcome yang_baxter() {
  Outcome o;
  const PoincareInstance cl = builtin("classical");
  const MetricTensor g = metric(cl);
  for (const Scalar &b : {Scalar(0), Scalar(1), Scalar(-1), Scalar::i()}) {
    const YangBaxterResult r = yang_baxter_check(build_rq(cl, g, b));
    o.require(r.pass, "b = " + b.to_string() + " residual " + r.residual);
  }
  Mat corrupted = build_rq(cl, g, 0);
  corrupted(0, 1) += 1;
  const YangBaxterResult bad = yang_baxter_check(corrupted);
  o.require(!bad.pass && bad.residual != "0", "corrupted R_Q passes");
  return o;
}

Outcome lorentz_invariance() {
  Outcome o;
  const PoincareInstance cl = builtin("classical");
  const LorentzAlgebra alg = make_lorentz(cl, 4);
  const InvarianceResult r = lambda_invariance_check(alg, metric(cl).g);
  o.require(r.pass, "(L(x)L)g != g: " + r.witness);
  o.require(!lambda_invariance_check(alg, Mat::identity(4)).pass, "g = I4 is invariant");
  return o;
}

Outcome cqt_conditions() {
  Outcome o;
  const PoincareInstance cl = builtin("classical");
  const std::pair<Scalar, std::pair<bool, bool>> table[] = {
      {Scalar(0), {true, true}},
      {Scalar(1), {true, false}},
      {Scalar(-1), {true, false}},
      {Scalar::i(), {false, false}},
  };
  for (const auto &[b, expect] : table) {
    const CqtEvaluator ev(cl, b);
    const bool star = star_cqt_check(ev).pass;
    const bool ct = ct_check(ev).pass;
    o.require(star == expect.first, "star-CQT at b = " + b.to_string() + " gave " +
                                        (star ? "pass" : "fail"));
    o.require(ct == expect.second, "CT at b = " + b.to_string() + " gave " + (ct ? "pass" : "fail"));
  }
  return o;
}

Outcome fock_sector() {
  Outcome o;
  const auto t = clock_type::now();
  const PoincareInstance cl = builtin("classical");
  const CqtEvaluator ev(cl, 0);
  const MinkowskiAlgebra alg = make_minkowski(cl, 4);
  auto x = [](Letter l) { return NCPoly::gen(l); };

  for (Letter a = 0; a < 4; ++a)
    for (Letter b = 0; b < 4; ++b) {
      const CTensor ab = CTensor::product(alg, {x(a), x(b)});
      const CTensor k = interchange_k(ev, alg, ab);
      o.require(k == CTensor::product(alg, {x(b), x(a)}), "K != flip on a pair");
      o.require(interchange_k(ev, alg, k) == ab, "K^2 != id on a pair");
    }
  size_t triples = 0;
  for (Letter a = 0; a < 4; ++a)
    for (Letter b = 0; b < 4; ++b)
      for (Letter c = 0; c < 4; ++c) {
        const CTensor abc = CTensor::product(alg, {x(a), x(b), x(c)});
        o.require(braid_action_word(ev, alg, {0, 1, 0}, abc) ==
                      braid_action_word(ev, alg, {1, 0, 1}, abc),
                  "braid relation fails");
        ++triples;
      }
  o.require(triples == 64, "triple count");

  for (Letter a = 0; a < 4; ++a)
    for (Letter b = 0; b < 4; ++b) {
      const CTensor s = symmetrize(ev, alg, CTensor::product(alg, {x(a), x(b)}));
      o.require(symmetrize(ev, alg, s) == s, "symmetrize is not idempotent");
    }

  const FirstOrderCalculus calc(alg);
  const SingleParticleOp d0 = [&calc](const NCPoly &p) { return calc.partial(0, p); };
  const CTensor s00 = symmetrize(ev, alg, CTensor::product(alg, {x(0), x(0)}));
  const CTensor lifted = lift_operator(ev, alg, d0, 2, s00);
  const CTensor expected =
      Scalar(2) * symmetrize(ev, alg, CTensor::product(alg, {NCPoly(Scalar(1)), x(0)}));
  o.require(lifted == expected, "W(2) d0 gives " + lifted.to_string());

  const double s = seconds_since(t);
  o.require(s < 60, "took " + fmt_seconds(s));
  if (o.pass)
    o.note = "16 pairs, 64 triples in " + fmt_seconds(s);
  return o;
}

std::string capture(const std::string &cmd, int &status) {
  std::string out;
  FILE *p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0)
    out.append(buf, n);
  status = pclose(p);
  return out;
}

Outcome determinism() {
  Outcome o;
  const std::string cmd = std::string("\"") + QMINK_CLI_PATH + "\" report --builtin classical";
  int s1 = 0, s2 = 0;
  const std::string a = capture(cmd, s1);
  const std::string b = capture(cmd, s2);
  o.require(s1 == 0 && s2 == 0, "report exited nonzero");
  o.require(!a.empty(), "empty report");
  o.require(a == b, "outputs differ");
  if (o.pass)
    o.note = std::to_string(a.size()) + " identical bytes";
  return o;
}

struct Criterion {
  const char *title;
  std::function<Outcome()> run;
};

} // namespace

int main(int argc, char **argv) {
  const Criterion all[] = {
      {"PBW profile", pbw_profile},
      {"calculus gate", calculus_gate},
      {"calculus identities", calculus_identities},
      {"metric and gammas", metric_and_gammas},
      {"Yang-Baxter", yang_baxter},
      {"Lorentz invariance", lorentz_invariance},
      {"CQT/CT conditions", cqt_conditions},
      {"Fock sector", fock_sector},
      {"determinism", determinism},
  };
  std::vector<size_t> selected;
  for (int i = 1; i < argc; ++i) {
    const int n = std::atoi(argv[i]);
    if (n < 1 || n > 9) {
      std::cerr << "criterion must be 1..9\n";
      return 2;
    }
    selected.push_back(static_cast<size_t>(n));
  }
  if (selected.empty())
    for (size_t n = 1; n <= 9; ++n)
      selected.push_back(n);

  bool ok = true;
  for (size_t n : selected) {
    Outcome o;
    try {
      o = all[n - 1].run();
    } catch (const std::exception &e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    ok = ok && o.pass;
    std::cout << "criterion " << n << " [" << (o.pass ? "PASS" : "FAIL") << "] " << all[n - 1].title
              << (o.note.empty() ? "" : ": " + o.note) << "\n";
  }
  return ok ? 0 : 1;
}
