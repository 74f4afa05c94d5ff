#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "evolution/config.hpp"
#include "evolution/individual.hpp"
#include "evolution/problem.hpp"

namespace scengen::harness {

/// "thermostat", "robot" or "lkas"; throws Error(invalid_argument) otherwise.
std::unique_ptr<Problem> make_problem(std::string_view name);
std::vector<std::string> problem_names();

// ---- statistics -----------------------------------------------------------

struct MannWhitneyResult {
  double u = 0.0;        // U of the first sample: #{x > y} + #{x == y} / 2
  double p_value = 1.0;  // two-tailed
  bool exact = false;
};

/// Two-tailed Mann-Whitney U test with midranks. Exact enumeration of the
/// rank assignments when both samples have at most 8 values, otherwise the
/// tie-corrected normal approximation with continuity correction.
MannWhitneyResult mann_whitney_u(std::span<const double> xs, std::span<const double> ys);

/// (#{x > y} - #{x < y}) / (n m).
double cliffs_delta(std::span<const double> xs, std::span<const double> ys);
/// negligible / small / medium / large at |delta| thresholds 0.147, 0.33, 0.474.
std::string magnitude(double delta);
/// Numeric order of the magnitude labels (negligible = 0 ... large = 3).
int magnitude_rank(std::string_view label);

double mean(std::span<const double> xs);
double median(std::span<const double> xs);

/// Mean Jaccard distance over all unordered pairs; 0 for fewer than two.
double mean_pairwise_jaccard(const ScenarioSchema& schema, const std::vector<TestCase>& cases);

// ---- experiments ----------------------------------------------------------

struct ExperimentConfig {
  std::string problem;
  std::vector<SearchMode> modes{SearchMode::SO, SearchMode::MO, SearchMode::RANDOM};
  int repetitions = 1;
  nlohmann::json overrides = nlohmann::json::object();  // EvolutionConfig fields
  std::uint64_t seed_base = 1;
  std::filesystem::path output_dir = "results";

  void validate() const;
  /// Seed of one run: seed_base + repetition * |modes| + mode index.
  std::uint64_t seed_for(int repetition, std::size_t mode_index) const;
};

ExperimentConfig experiment_config_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const ExperimentConfig& config);

struct RunRecord {
  std::string problem;
  SearchMode mode = SearchMode::SO;
  int repetition = 0;
  std::uint64_t seed = 0;
  nlohmann::json result;  // search_result_to_json document

  double best_f1() const;
  std::vector<double> history() const;
  /// Genomes the diversity report looks at: the Pareto front for MO, the
  /// ten fittest distinct genomes otherwise.
  std::vector<TestCase> diversity_set(const ScenarioSchema& schema) const;
  nlohmann::json to_json() const;
  static RunRecord from_json(const nlohmann::json& doc);
  /// File name under records/: <problem>_<mode>_<repetition>.json
  std::string file_name() const;
};

struct ExperimentOutcome {
  std::vector<RunRecord> records;
  std::vector<std::string> failures;  // one message per failed run
  int reused = 0;                     // records loaded instead of recomputed
};

using ProgressFn = std::function<void(const std::string&)>;

/// Runs repetitions x modes searches sharing one evaluation budget per mode.
/// Records land in output_dir/records and existing ones are reused, so an
/// interrupted experiment can be resumed. Wall times are appended to
/// output_dir/timings.csv. A failing run is reported with its seed and does
/// not stop the others.
ExperimentOutcome run_experiment(const ExperimentConfig& config, const ProgressFn& progress = {});

/// Every record under dir/records (sorted by file name), optionally only
/// those of one problem.
std::vector<RunRecord> load_records(const std::filesystem::path& dir, std::string_view problem = {});

// ---- reporting ------------------------------------------------------------

struct ModeSummary {
  SearchMode mode = SearchMode::SO;
  std::vector<double> best;       // per repetition
  std::vector<double> diversity;  // per repetition (empty for RANDOM)
  double mean_best = 0.0;
  double median_best = 0.0;
  std::optional<double> mean_diversity;
};

struct Comparison {
  SearchMode a = SearchMode::SO;
  SearchMode b = SearchMode::RANDOM;
  double p_value = 1.0;
  double delta = 0.0;  // positive when a tends to be larger
  std::string magnitude;
};

struct StatsReport {
  std::string problem;
  std::vector<ModeSummary> modes;
  std::vector<Comparison> fitness;    // every mode pair
  std::vector<Comparison> diversity;  // MO vs SO when both ran
  std::vector<std::string> warnings;

  const ModeSummary* summary(SearchMode mode) const;
  const Comparison* fitness_comparison(SearchMode a, SearchMode b) const;
  const Comparison* diversity_comparison(SearchMode a, SearchMode b) const;
};

/// Per-record diversity: mean pairwise Jaccard distance of the record's
/// diversity set. Sets with fewer than two genomes score 0 and add a warning.
double record_diversity(const ScenarioSchema& schema, const RunRecord& record, std::vector<std::string>* warnings);

StatsReport compute_report(const Problem& problem, const std::vector<RunRecord>& records);
nlohmann::json to_json(const StatsReport& report);

/// summary.csv (one row per record), report.json, convergence/<record>.csv
/// (generation, best F1) and exports/ for the `top_exports` fittest distinct
/// scenarios across all records. Returns the written paths.
std::vector<std::filesystem::path> emit_outputs(const Problem& problem, const std::vector<RunRecord>& records,
                                                const StatsReport& report, const std::filesystem::path& out_dir,
                                                std::size_t top_exports = 3);

}  // namespace scengen::harness
