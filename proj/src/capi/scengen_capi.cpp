#include "scengen/scengen.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <string>

#include <json.hpp>

#include "common/error.hpp"
#include "evolution/search.hpp"
#include "evolution/serialize.hpp"
#include "harness/harness.hpp"
#include "lkas/lkas.hpp"
#include "scenario/generate.hpp"
#include "scenario/serialize.hpp"

struct sg_problem {
  std::unique_ptr<scengen::Problem> impl;
};

struct sg_result {
  const scengen::Problem* problem = nullptr;
  scengen::SearchResult impl;
};

namespace {

thread_local std::string g_last_error;

sg_status to_status(scengen::ErrorCode code) {
  switch (code) {
    case scengen::ErrorCode::invalid_argument: return SG_ERR_INVALID_ARGUMENT;
    case scengen::ErrorCode::schema_mismatch: return SG_ERR_SCHEMA_MISMATCH;
    case scengen::ErrorCode::domain_violation: return SG_ERR_DOMAIN_VIOLATION;
    case scengen::ErrorCode::degenerate_fit: return SG_ERR_DEGENERATE_FIT;
    case scengen::ErrorCode::not_converged: return SG_ERR_NOT_CONVERGED;
    case scengen::ErrorCode::io: return SG_ERR_IO;
  }
  return SG_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes and the thread's
// last-error message.
template <typename F>
sg_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return SG_OK;
  } catch (const scengen::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("invalid JSON: ") + e.what();
    return SG_ERR_INVALID_ARGUMENT;
  } catch (const std::filesystem::filesystem_error& e) {
    g_last_error = e.what();
    return SG_ERR_IO;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SG_ERR_INTERNAL;
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw scengen::Error(scengen::ErrorCode::invalid_argument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nlohmann::json parse(const char* text, const char* what) {
  require(text != nullptr, what);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw scengen::Error(scengen::ErrorCode::invalid_argument, std::string(what) + ": " + e.what());
  }
}

// Accepts a scenario document, an individual or a run record.
scengen::TestCase scenario_from_document(const scengen::ScenarioSchema& schema, const nlohmann::json& doc) {
  if (doc.contains("result")) return scenario_from_document(schema, doc.at("result").at("best"));
  if (doc.contains("genome")) return scengen::test_case_from_json(schema, doc.at("genome"));
  return scengen::test_case_from_json(schema, doc);
}

}  // namespace

extern "C" {

const char* sg_version(void) { return "0.1.0"; }

const char* sg_status_name(sg_status status) {
  switch (status) {
    case SG_OK: return "ok";
    case SG_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case SG_ERR_SCHEMA_MISMATCH: return "schema_mismatch";
    case SG_ERR_DOMAIN_VIOLATION: return "domain_violation";
    case SG_ERR_DEGENERATE_FIT: return "degenerate_fit";
    case SG_ERR_NOT_CONVERGED: return "not_converged";
    case SG_ERR_IO: return "io";
    case SG_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* sg_last_error(void) { return g_last_error.c_str(); }

void sg_string_free(char* str) { std::free(str); }

sg_status sg_problem_create(const char* name, sg_problem** out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "sg_problem_create: null argument");
    auto p = std::make_unique<sg_problem>();
    p->impl = scengen::harness::make_problem(name);
    *out = p.release();
  });
}

void sg_problem_destroy(sg_problem* problem) { delete problem; }

sg_status sg_problem_name(const sg_problem* problem, char** name_out) {
  return guarded([&] {
    require(problem != nullptr && name_out != nullptr, "sg_problem_name: null argument");
    *name_out = dup_string(problem->impl->name());
  });
}

sg_status sg_problem_default_config(const sg_problem* problem, char** json_out) {
  return guarded([&] {
    require(problem != nullptr && json_out != nullptr, "sg_problem_default_config: null argument");
    *json_out = dup_string(scengen::to_json(problem->impl->default_config()).dump());
  });
}

sg_status sg_problem_random_case(const sg_problem* problem, uint64_t seed, char** json_out) {
  return guarded([&] {
    require(problem != nullptr && json_out != nullptr, "sg_problem_random_case: null argument");
    scengen::Rng rng(seed);
    const auto tc = scengen::random_test_case(problem->impl->schema(), rng);
    *json_out = dup_string(scengen::test_case_to_json(problem->impl->schema(), tc).dump());
  });
}

sg_status sg_problem_evaluate(const sg_problem* problem, const char* scenario_json, double* fitness_out) {
  return guarded([&] {
    require(problem != nullptr && fitness_out != nullptr, "sg_problem_evaluate: null argument");
    const auto tc = scenario_from_document(problem->impl->schema(), parse(scenario_json, "scenario"));
    *fitness_out = problem->impl->fitness(tc);
  });
}

sg_status sg_problem_export(const sg_problem* problem, const char* document_json, const char* prefix,
                            char** paths_json_out) {
  return guarded([&] {
    require(problem != nullptr && prefix != nullptr && paths_json_out != nullptr, "sg_problem_export: null argument");
    const auto tc = scenario_from_document(problem->impl->schema(), parse(document_json, "scenario"));
    const std::filesystem::path p(prefix);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    nlohmann::json paths = nlohmann::json::array();
    for (const auto& written : problem->impl->export_scenario(tc, p)) paths.push_back(written.string());
    *paths_json_out = dup_string(paths.dump());
  });
}

sg_status sg_search_run(const sg_problem* problem, const char* config_json, sg_result** out) {
  return guarded([&] {
    require(problem != nullptr && out != nullptr, "sg_search_run: null argument");
    scengen::EvolutionConfig config = problem->impl->default_config();
    if (config_json != nullptr) config = scengen::apply_overrides(config, parse(config_json, "search config"));
    auto r = std::make_unique<sg_result>();
    r->problem = problem->impl.get();
    r->impl = scengen::run_search(*problem->impl, config);
    *out = r.release();
  });
}

void sg_result_destroy(sg_result* result) { delete result; }

sg_status sg_result_best_f1(const sg_result* result, double* out) {
  return guarded([&] {
    require(result != nullptr && out != nullptr, "sg_result_best_f1: null argument");
    *out = result->impl.best.raw_f1();
  });
}

sg_status sg_result_evaluations(const sg_result* result, int64_t* out) {
  return guarded([&] {
    require(result != nullptr && out != nullptr, "sg_result_evaluations: null argument");
    *out = result->impl.evaluations_used;
  });
}

sg_status sg_result_wall_time(const sg_result* result, double* seconds_out) {
  return guarded([&] {
    require(result != nullptr && seconds_out != nullptr, "sg_result_wall_time: null argument");
    *seconds_out = result->impl.wall_time;
  });
}

sg_status sg_result_to_json(const sg_result* result, char** json_out) {
  return guarded([&] {
    require(result != nullptr && json_out != nullptr, "sg_result_to_json: null argument");
    *json_out = dup_string(scengen::search_result_to_json(result->problem->schema(), result->impl).dump());
  });
}

sg_status sg_experiment_run(const char* config_json, sg_progress_fn progress, void* user_data, int* failed_runs_out) {
  return guarded([&] {
    const auto config = scengen::harness::experiment_config_from_json(parse(config_json, "experiment config"));
    scengen::harness::ProgressFn fn;
    if (progress != nullptr) fn = [&](const std::string& line) { progress(line.c_str(), user_data); };
    const auto outcome = scengen::harness::run_experiment(config, fn);
    if (failed_runs_out != nullptr) *failed_runs_out = static_cast<int>(outcome.failures.size());
  });
}

sg_status sg_stats_report(const char* output_dir, const char* problem, int top_exports, char** report_json_out) {
  return guarded([&] {
    require(output_dir != nullptr && problem != nullptr, "sg_stats_report: null argument");
    require(top_exports >= 0, "sg_stats_report: negative export count");
    const auto p = scengen::harness::make_problem(problem);
    const auto records = scengen::harness::load_records(output_dir, problem);
    if (records.empty())
      throw scengen::Error(scengen::ErrorCode::io, std::string("no records for ") + problem + " in " + output_dir);
    const auto report = scengen::harness::compute_report(*p, records);
    scengen::harness::emit_outputs(*p, records, report, output_dir, static_cast<std::size_t>(top_exports));
    if (report_json_out != nullptr) *report_json_out = dup_string(scengen::harness::to_json(report).dump());
  });
}

sg_status sg_lkas_synthesize_dataset(const char* dataset_dir, int count, uint64_t seed, const char* params_json) {
  return guarded([&] {
    require(dataset_dir != nullptr, "sg_lkas_synthesize_dataset: null directory");
    scengen::lkas::CarParams params;
    if (params_json != nullptr) params = scengen::lkas::car_params_from_json(parse(params_json, "car parameters"));
    scengen::lkas::synthesize_dataset(dataset_dir, count, seed, params);
  });
}

sg_status sg_lkas_calibrate(const char* dataset_dir, const char* x0_json, int max_iterations,
                            char** result_json_out) {
  return guarded([&] {
    require(dataset_dir != nullptr && result_json_out != nullptr, "sg_lkas_calibrate: null argument");
    require(max_iterations >= 0, "sg_lkas_calibrate: negative iteration cap");
    scengen::lkas::CarParams x0;
    if (x0_json != nullptr) x0 = scengen::lkas::car_params_from_json(parse(x0_json, "initial parameters"));
    const auto dataset = scengen::lkas::load_calibration_dataset(dataset_dir);
    scengen::lkas::NelderMeadOptions options;
    options.max_iterations = max_iterations;
    options.tolerance = 1e-4;
    const auto r = scengen::lkas::calibrate(dataset, x0, options);
    const nlohmann::json doc = {{"params", scengen::lkas::to_json(r.params)},
                                {"mean_hausdorff", r.mean_distance},
                                {"initial_mean_hausdorff", r.initial_distance},
                                {"iterations", r.iterations},
                                {"converged", r.converged},
                                {"samples", dataset.size()}};
    *result_json_out = dup_string(doc.dump());
  });
}

}  // extern "C"
