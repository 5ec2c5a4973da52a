#include <qminkowski/qminkowski.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct Args {
  std::string file;
  std::string builtin;
  unsigned degree = 0;
  std::string b;
  std::string k;
  unsigned n = 2;
  std::string json_path;
  bool timings = false;
};

int input_error(const std::string &what) {
  std::cerr << "error: " << what << "\n";
  return kExitInputError;
}

int run(const std::string &suite, const Args &a) {
  if (a.file.empty() == a.builtin.empty())
    return input_error("give exactly one of <file> or --builtin NAME");

  qm_instance *inst = nullptr;
  qm_status st = a.builtin.empty() ? qm_instance_load(a.file.c_str(), &inst)
                                   : qm_instance_builtin(a.builtin.c_str(), &inst);
  if (st != QM_OK)
    return input_error(std::string(qm_status_string(st)) + ": " + qm_last_error());

  qm_options opts;
  qm_options_init(&opts);
  opts.degree = a.degree;
  opts.b = a.b.empty() ? nullptr : a.b.c_str();
  opts.k = a.k.empty() ? nullptr : a.k.c_str();
  opts.fock_n = a.n;
  opts.timings = a.timings ? 1 : 0;

  qm_report *rep = nullptr;
  st = qm_run_suite(inst, suite.c_str(), &opts, &rep);
  qm_instance_free(inst);
  if (st != QM_OK)
    return input_error(std::string(qm_status_string(st)) + ": " + qm_last_error());

  std::cout << qm_report_text(rep);
  int code = qm_report_passed(rep) ? kExitPass : kExitCheckFailed;
  if (!a.json_path.empty()) {
    std::ofstream out(a.json_path, std::ios::binary);
    out << qm_report_json(rep);
    if (!out) {
      qm_report_free(rep);
      return input_error("cannot write " + a.json_path);
    }
  }
  qm_report_free(rep);
  return code;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact checks for quantum Minkowski spaces and their Poincare groups"};
  app.require_subcommand(1);
  Args args;
  app.add_flag("--timings", args.timings, "Add per-suite wall time to the report");

  struct Spec {
    const char *name;
    const char *help;
    bool degree, braid, fock, json;
  };
  const Spec specs[] = {
      {"validate", "Shape, parameter, metric and obstruction checks", false, false, false, false},
      {"pbw", "Dimension profile of the Minkowski algebra", true, false, false, false},
      {"calculus", "First-order calculus identities", true, false, false, false},
      {"dirac", "Metric, gamma matrices and the Dirac square", true, false, false, false},
      {"lorentz", "Lorentz algebra and metric invariance", false, false, false, false},
      {"braiding", "R_Q, Yang-Baxter and the coquasitriangular functional", false, true, false,
       false},
      {"fock", "Interchange operator, permutation action and lifted operators", false, true, true,
       false},
      {"report", "Every suite", true, true, true, true},
  };

  std::map<CLI::App *, std::string> names;
  for (const auto &s : specs) {
    CLI::App *sub = app.add_subcommand(s.name, s.help);
    names[sub] = s.name;
    sub->add_option("file", args.file, "Instance JSON file");
    sub->add_option("--builtin", args.builtin, "Built-in instance name (classical)");
    sub->add_flag("--timings", args.timings, "Add per-suite wall time to the report");
    if (s.degree)
      sub->add_option("--degree", args.degree, "Degree cap")->check(CLI::Range(2, 6));
    if (s.braid) {
      sub->add_option("--b", args.b, "Parameter b, e.g. 0, -1, 1/2+3/4i, i");
      sub->add_option("--k", args.k, "Sign k (1 or -1)");
    }
    if (s.fock)
      sub->add_option("--n", args.n, "Tensor slots for the symmetrizer checks")
          ->check(CLI::Range(1, 4));
    if (s.json)
      sub->add_option("--json", args.json_path, "Also write the JSON report here");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitInputError;
  }

  for (const auto &[sub, name] : names)
    if (sub->parsed())
      return run(name, args);
  return input_error("no subcommand");
}
