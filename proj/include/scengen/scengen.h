/* scengen: search-based scenario generation for autonomous-system testing. */
#ifndef SCENGEN_SCENGEN_H
#define SCENGEN_SCENGEN_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(SCENGEN_BUILDING_LIBRARY)
#    define SCENGEN_API __declspec(dllexport)
#  else
#    define SCENGEN_API __declspec(dllimport)
#  endif
#else
#  define SCENGEN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sg_status {
  SG_OK = 0,
  SG_ERR_INVALID_ARGUMENT = 1,
  SG_ERR_SCHEMA_MISMATCH = 2,
  SG_ERR_DOMAIN_VIOLATION = 3,
  SG_ERR_DEGENERATE_FIT = 4,
  SG_ERR_NOT_CONVERGED = 5,
  SG_ERR_IO = 6,
  SG_ERR_INTERNAL = 99
} sg_status;

/* Opaque handles. */
typedef struct sg_problem sg_problem;
typedef struct sg_result sg_result;

/* Called with one human-readable line per finished or reused run. */
typedef void (*sg_progress_fn)(const char* message, void* user_data);

SCENGEN_API const char* sg_version(void);
SCENGEN_API const char* sg_status_name(sg_status status);
/* Message of the last failing call on this thread ("" if none). */
SCENGEN_API const char* sg_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
SCENGEN_API void sg_string_free(char* str);

/* name: "thermostat", "robot" or "lkas". */
SCENGEN_API sg_status sg_problem_create(const char* name, sg_problem** out);
SCENGEN_API void sg_problem_destroy(sg_problem* problem);
SCENGEN_API sg_status sg_problem_name(const sg_problem* problem, char** name_out);
/* Default search configuration as JSON. */
SCENGEN_API sg_status sg_problem_default_config(const sg_problem* problem, char** json_out);
/* A uniformly sampled scenario document. */
SCENGEN_API sg_status sg_problem_random_case(const sg_problem* problem, uint64_t seed, char** json_out);
/* Raw fault-revealing power of a scenario document. */
SCENGEN_API sg_status sg_problem_evaluate(const sg_problem* problem, const char* scenario_json, double* fitness_out);
/* Writes simulator-facing files named <prefix>_*. The document may be a
   scenario, an individual ({"genome": ...}) or a run record (its best
   individual is used). Returns the written paths as a JSON array. */
SCENGEN_API sg_status sg_problem_export(const sg_problem* problem, const char* document_json, const char* prefix,
                                        char** paths_json_out);

/* config_json overrides the problem defaults; NULL or "{}" keeps them. */
SCENGEN_API sg_status sg_search_run(const sg_problem* problem, const char* config_json, sg_result** out);
SCENGEN_API void sg_result_destroy(sg_result* result);
SCENGEN_API sg_status sg_result_best_f1(const sg_result* result, double* out);
SCENGEN_API sg_status sg_result_evaluations(const sg_result* result, int64_t* out);
SCENGEN_API sg_status sg_result_wall_time(const sg_result* result, double* seconds_out);
SCENGEN_API sg_status sg_result_to_json(const sg_result* result, char** json_out);

/* Runs (or resumes) an experiment described by an experiment config
   document. failed_runs_out receives the number of failed repetitions;
   the call itself only fails on configuration or filesystem errors. */
SCENGEN_API sg_status sg_experiment_run(const char* config_json, sg_progress_fn progress, void* user_data,
                                        int* failed_runs_out);

/* Recomputes statistics from output_dir/records for one problem, writes the
   summary, report, convergence and export files into output_dir and returns
   the report document. */
SCENGEN_API sg_status sg_stats_report(const char* output_dir, const char* problem, int top_exports,
                                      char** report_json_out);

/* Writes `count` road/trajectory pairs driven with the given car parameters
   (NULL: defaults) into dataset_dir. */
SCENGEN_API sg_status sg_lkas_synthesize_dataset(const char* dataset_dir, int count, uint64_t seed,
                                                 const char* params_json);
/* Fits (v0, k, alpha, beta) to a dataset directory. x0_json may be NULL
   (defaults). Returns {"params": ..., "mean_hausdorff": ..., ...}. */
SCENGEN_API sg_status sg_lkas_calibrate(const char* dataset_dir, const char* x0_json, int max_iterations,
                                        char** result_json_out);

#ifdef __cplusplus
}
#endif

#endif /* SCENGEN_SCENGEN_H */
