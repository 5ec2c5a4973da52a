#include "qminkowski/qminkowski.h"

#include "qmink/errors.hpp"
#include "qmink/instance.hpp"
#include "qmink/suites.hpp"

#include <algorithm>
#include <new>
#include <string>

struct qm_instance {
  qmink::PoincareInstance inst;
};

struct qm_report {
  bool passed = false;
  std::string text;
  std::string json;
};

namespace {

thread_local std::string last_error;

qm_status fail(qm_status s, const std::string &msg) {
  last_error = msg;
  return s;
}

template <class F> qm_status guarded(F &&body) {
  try {
    last_error.clear();
    return body();
  } catch (const qmink::ParseError &e) {
    return fail(QM_ERR_PARSE, e.what());
  } catch (const qmink::IoError &e) {
    return fail(QM_ERR_IO, e.what());
  } catch (const qmink::ConstraintError &e) {
    return fail(QM_ERR_CONSTRAINT, e.what());
  } catch (const qmink::UnknownInstance &e) {
    return fail(QM_ERR_UNKNOWN_INSTANCE, e.what());
  } catch (const qmink::DegreeError &e) {
    return fail(QM_ERR_DEGREE, e.what());
  } catch (const qmink::ShapeError &e) {
    return fail(QM_ERR_SHAPE, e.what());
  } catch (const qmink::CalculusObstruction &e) {
    return fail(QM_ERR_CALCULUS_OBSTRUCTION, e.what());
  } catch (const qmink::NotCotriangular &e) {
    return fail(QM_ERR_NOT_COTRIANGULAR, e.what());
  } catch (const qmink::Error &e) {
    return fail(QM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc &) {
    return fail(QM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(QM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QM_ERR_INTERNAL, "unknown error");
  }
}

} // namespace

extern "C" {

void qm_options_init(qm_options *opts) {
  if (!opts)
    return;
  opts->degree = 0;
  opts->b = nullptr;
  opts->k = nullptr;
  opts->fock_n = 2;
  opts->timings = 0;
}

qm_status qm_instance_load(const char *path, qm_instance **out) {
  if (!path || !out)
    return fail(QM_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new qm_instance{qmink::load_instance(path)};
    return QM_OK;
  });
}

qm_status qm_instance_builtin(const char *name, qm_instance **out) {
  if (!name || !out)
    return fail(QM_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new qm_instance{qmink::builtin(name)};
    return QM_OK;
  });
}

qm_status qm_instance_write(const qm_instance *inst, const char *path) {
  if (!inst || !path)
    return fail(QM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    qmink::write_instance(inst->inst, path);
    return QM_OK;
  });
}

const char *qm_instance_name(const qm_instance *inst) { return inst ? inst->inst.name.c_str() : ""; }

void qm_instance_free(qm_instance *inst) { delete inst; }

qm_status qm_run_suite(const qm_instance *inst, const char *suite, const qm_options *opts,
                       qm_report **out) {
  if (!inst || !suite || !out)
    return fail(QM_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  const std::string name = suite;
  const auto &names = qmink::suite_names();
  if (name != "report" && std::find(names.begin(), names.end(), name) == names.end())
    return fail(QM_ERR_INVALID_ARGUMENT, "unknown suite: " + name);
  qm_options defaults;
  qm_options_init(&defaults);
  const qm_options &o = opts ? *opts : defaults;
  return guarded([&] {
    qmink::SuiteOptions so;
    so.degree = o.degree;
    so.fock_n = o.fock_n;
    if (o.b)
      so.b = qmink::Scalar::parse(o.b);
    if (o.k)
      so.k = qmink::Scalar::parse(o.k);
    const qmink::Report r = qmink::run_report(name, inst->inst, so);
    *out = new qm_report{r.pass, qmink::report_text(r, o.timings != 0),
                         qmink::report_json(r, o.timings != 0)};
    return QM_OK;
  });
}

int qm_report_passed(const qm_report *report) { return report && report->passed ? 1 : 0; }

const char *qm_report_text(const qm_report *report) { return report ? report->text.c_str() : ""; }

const char *qm_report_json(const qm_report *report) { return report ? report->json.c_str() : ""; }

void qm_report_free(qm_report *report) { delete report; }

const char *qm_last_error(void) { return last_error.c_str(); }

const char *qm_status_string(qm_status status) {
  switch (status) {
  case QM_OK: return "ok";
  case QM_ERR_INVALID_ARGUMENT: return "invalid argument";
  case QM_ERR_PARSE: return "parse error";
  case QM_ERR_IO: return "i/o error";
  case QM_ERR_CONSTRAINT: return "constraint violated";
  case QM_ERR_UNKNOWN_INSTANCE: return "unknown instance";
  case QM_ERR_DEGREE: return "degree error";
  case QM_ERR_SHAPE: return "shape error";
  case QM_ERR_CALCULUS_OBSTRUCTION: return "calculus obstruction";
  case QM_ERR_NOT_COTRIANGULAR: return "not cotriangular";
  case QM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

} // extern "C"
