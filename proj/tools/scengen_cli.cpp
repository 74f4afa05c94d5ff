// Command-line front end over the scengen C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scengen/scengen.h"

namespace {

using nlohmann::json;

// Owns a string returned by the library.
struct LibString {
  char* ptr = nullptr;
  ~LibString() { sg_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

bool check(sg_status status, const std::string& what) {
  if (status == SG_OK) return true;
  std::cerr << "scengen: " << what << " failed (" << sg_status_name(status) << "): " << sg_last_error() << '\n';
  return false;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_progress(const char* message, void*) { std::cerr << message << '\n'; }

void print_report(const json& report) {
  std::cout << "problem " << report.at("problem").get<std::string>() << '\n';
  for (const auto& m : report.at("modes")) {
    std::cout << "  " << m.at("mode").get<std::string>() << ": mean best " << m.at("mean_best_f1").get<double>()
              << ", median " << m.at("median_best_f1").get<double>();
    if (m.contains("mean_diversity")) std::cout << ", diversity " << m.at("mean_diversity").get<double>();
    std::cout << '\n';
  }
  for (const char* key : {"fitness_comparisons", "diversity_comparisons"})
    for (const auto& c : report.at(key))
      std::cout << "  " << (std::string(key) == "fitness_comparisons" ? "fitness " : "diversity ")
                << c.at("a").get<std::string>() << " vs " << c.at("b").get<std::string>()
                << ": p = " << c.at("p_value").get<double>() << ", delta = " << c.at("cliffs_delta").get<double>()
                << " (" << c.at("magnitude").get<std::string>() << ")\n";
  for (const auto& w : report.at("warnings")) std::cout << "  warning: " << w.get<std::string>() << '\n';
}

int stats_for(const std::string& out, const std::string& problem, int top) {
  LibString report;
  if (!check(sg_stats_report(out.c_str(), problem.c_str(), top, &report.ptr), "stats for " + problem)) return 1;
  print_report(json::parse(report.str()));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search-based scenario generation for autonomous-system testing"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sg_version()));

  // run
  auto* run = app.add_subcommand("run", "Run (or resume) an experiment and write its report");
  std::string problem = "thermostat";
  std::vector<std::string> modes;
  int reps = 1;
  long budget = 0;
  std::uint64_t seed = 1;
  std::string out = "results";
  std::string config_path;
  int top = 3;
  run->add_option("--problem", problem, "thermostat, robot or lkas")->check(CLI::IsMember({"thermostat", "robot", "lkas"}));
  run->add_option("--mode", modes, "SO, MO or RANDOM (repeatable; default all three)");
  run->add_option("--reps", reps, "Repetitions per mode")->check(CLI::PositiveNumber);
  run->add_option("--budget", budget, "Evaluations per run (default: the problem's)")->check(CLI::PositiveNumber);
  run->add_option("--seed", seed, "Seed base");
  run->add_option("--out", out, "Output directory");
  run->add_option("--config", config_path, "Experiment config JSON; its fields override the flags")
      ->check(CLI::ExistingFile);
  run->add_option("--top", top, "Scenarios to export after the run")->check(CLI::NonNegativeNumber);

  // stats
  auto* stats = app.add_subcommand("stats", "Recompute the report from stored run records");
  std::string stats_problem;
  stats->add_option("--out", out, "Experiment output directory")->check(CLI::ExistingDirectory);
  stats->add_option("--problem", stats_problem, "Only this problem (default: every problem with records)");
  stats->add_option("--top", top, "Scenarios to export")->check(CLI::NonNegativeNumber);

  // export
  auto* exp = app.add_subcommand("export", "Write simulator inputs for a scenario, individual or run record");
  std::string scenario_path, prefix;
  exp->add_option("--problem", problem, "thermostat, robot or lkas")->required();
  exp->add_option("--scenario", scenario_path, "JSON document")->required()->check(CLI::ExistingFile);
  exp->add_option("--out", prefix, "Output path prefix")->required();

  // calibrate
  auto* cal = app.add_subcommand("calibrate", "Fit the LKAS car parameters to recorded trajectories");
  std::string dataset, x0_path;
  int iterations = 300;
  int synthesize = 0;
  cal->add_option("--dataset", dataset, "Directory of <name>_road.json / <name>_trajectory.csv pairs")->required();
  cal->add_option("--x0", x0_path, "JSON file with the starting parameters")->check(CLI::ExistingFile);
  cal->add_option("--iterations", iterations, "Nelder-Mead iteration cap")->check(CLI::NonNegativeNumber);
  cal->add_option("--synthesize", synthesize, "First write this many surrogate-driven samples into the dataset");
  cal->add_option("--seed", seed, "Seed for --synthesize");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      json config = {{"problem", problem}, {"repetitions", reps}, {"seed_base", seed}, {"output_dir", out}};
      if (!modes.empty()) config["modes"] = modes;
      if (budget > 0) config["overrides"] = {{"eval_budget", budget}};
      if (!config_path.empty()) {
        const json file = json::parse(read_file(config_path));
        if (!file.is_object()) throw std::runtime_error(config_path + ": expected a JSON object");
        for (const auto& [key, value] : file.items()) {
          if (key == "overrides" && config.contains("overrides") && value.is_object())
            config["overrides"].update(value);
          else
            config[key] = value;
        }
      }
      int failed = 0;
      if (!check(sg_experiment_run(config.dump().c_str(), print_progress, nullptr, &failed), "run")) return 1;
      const int rc = stats_for(config.at("output_dir").get<std::string>(), config.at("problem").get<std::string>(), top);
      if (failed > 0) {
        std::cerr << "scengen: " << failed << " run(s) failed\n";
        return 2;
      }
      return rc;
    }
    if (stats->parsed()) {
      std::vector<std::string> problems;
      if (!stats_problem.empty()) problems.push_back(stats_problem);
      else problems = {"thermostat", "robot", "lkas"};
      int rc = 0, found = 0;
      for (const auto& p : problems) {
        LibString report;
        const sg_status status = sg_stats_report(out.c_str(), p.c_str(), top, &report.ptr);
        if (status == SG_ERR_IO && stats_problem.empty() && std::string(sg_last_error()).rfind("no records", 0) == 0)
          continue;
        ++found;
        if (!check(status, "stats for " + p)) {
          rc = 1;
          continue;
        }
        print_report(json::parse(report.str()));
      }
      if (found == 0) {
        std::cerr << "scengen: no run records under " << out << '\n';
        return 1;
      }
      return rc;
    }
    if (exp->parsed()) {
      sg_problem* handle = nullptr;
      if (!check(sg_problem_create(problem.c_str(), &handle), "problem")) return 1;
      LibString paths;
      const std::string doc = read_file(scenario_path);
      const bool ok = check(sg_problem_export(handle, doc.c_str(), prefix.c_str(), &paths.ptr), "export");
      sg_problem_destroy(handle);
      if (!ok) return 1;
      for (const auto& p : json::parse(paths.str())) std::cout << p.get<std::string>() << '\n';
      return 0;
    }
    if (cal->parsed()) {
      std::string x0;
      if (!x0_path.empty()) x0 = read_file(x0_path);
      if (synthesize > 0 &&
          !check(sg_lkas_synthesize_dataset(dataset.c_str(), synthesize, seed, nullptr), "dataset synthesis"))
        return 1;
      LibString result;
      if (!check(sg_lkas_calibrate(dataset.c_str(), x0.empty() ? nullptr : x0.c_str(), iterations, &result.ptr),
                 "calibration"))
        return 1;
      std::cout << json::parse(result.str()).dump(2) << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "scengen: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
