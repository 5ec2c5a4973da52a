#ifndef QMINKOWSKI_H
#define QMINKOWSKI_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(QMINKOWSKI_BUILDING)
#define QM_API __attribute__((visibility("default")))
#else
#define QM_API
#endif

typedef struct qm_instance qm_instance;
typedef struct qm_report qm_report;

typedef enum qm_status {
  QM_OK = 0,
  QM_ERR_INVALID_ARGUMENT = 1,
  QM_ERR_PARSE = 2,
  QM_ERR_IO = 3,
  QM_ERR_CONSTRAINT = 4,
  QM_ERR_UNKNOWN_INSTANCE = 5,
  QM_ERR_DEGREE = 6,
  QM_ERR_SHAPE = 7,
  QM_ERR_CALCULUS_OBSTRUCTION = 8,
  QM_ERR_NOT_COTRIANGULAR = 9,
  QM_ERR_INTERNAL = 10
} qm_status;

/* Suite options. Strings are exact scalars such as "1", "-1/2", "i" or "1/2+3/4i". */
typedef struct qm_options {
  unsigned degree; /* 0 = suite default */
  const char *b;   /* NULL = "0" */
  const char *k;   /* NULL = "1" */
  unsigned fock_n;
  int timings; /* nonzero adds per-suite wall time to the output */
} qm_options;

QM_API void qm_options_init(qm_options *opts);

QM_API qm_status qm_instance_load(const char *path, qm_instance **out);
QM_API qm_status qm_instance_builtin(const char *name, qm_instance **out);
QM_API qm_status qm_instance_write(const qm_instance *inst, const char *path);
QM_API const char *qm_instance_name(const qm_instance *inst);
QM_API void qm_instance_free(qm_instance *inst);

/* suite: "validate", "pbw", "calculus", "dirac", "lorentz", "braiding", "fock",
   or "report" for all of them. Failed checks are part of the report; only
   input errors return a non-OK status. */
QM_API qm_status qm_run_suite(const qm_instance *inst, const char *suite,
                              const qm_options *opts, qm_report **out);
QM_API int qm_report_passed(const qm_report *report);
/* Owned by the report. */
QM_API const char *qm_report_text(const qm_report *report);
QM_API const char *qm_report_json(const qm_report *report);
QM_API void qm_report_free(qm_report *report);

/* Message of the last failing call on this thread, or "". */
QM_API const char *qm_last_error(void);
QM_API const char *qm_status_string(qm_status status);

#ifdef __cplusplus
}
#endif

#endif
