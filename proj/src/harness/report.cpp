#include <algorithm>
#include <fstream>
#include <iomanip>

#include "common/error.hpp"
#include "evolution/serialize.hpp"
#include "harness/harness.hpp"
#include "scenario/serialize.hpp"

namespace scengen::harness {

namespace {

Comparison compare(SearchMode a, SearchMode b, const std::vector<double>& xs, const std::vector<double>& ys) {
  Comparison c;
  c.a = a;
  c.b = b;
  c.p_value = mann_whitney_u(xs, ys).p_value;
  c.delta = cliffs_delta(xs, ys);
  c.magnitude = magnitude(c.delta);
  return c;
}

const Comparison* find(const std::vector<Comparison>& list, SearchMode a, SearchMode b) {
  for (const auto& c : list)
    if (c.a == a && c.b == b) return &c;
  return nullptr;
}

nlohmann::json comparison_json(const Comparison& c) {
  return {{"a", to_string(c.a)},
          {"b", to_string(c.b)},
          {"p_value", c.p_value},
          {"cliffs_delta", c.delta},
          {"magnitude", c.magnitude}};
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io, "cannot write " + path.string());
  out << std::setprecision(10);
  return out;
}

}  // namespace

const ModeSummary* StatsReport::summary(SearchMode mode) const {
  for (const auto& m : modes)
    if (m.mode == mode) return &m;
  return nullptr;
}

const Comparison* StatsReport::fitness_comparison(SearchMode a, SearchMode b) const { return find(fitness, a, b); }

const Comparison* StatsReport::diversity_comparison(SearchMode a, SearchMode b) const {
  return find(diversity, a, b);
}

double record_diversity(const ScenarioSchema& schema, const RunRecord& record, std::vector<std::string>* warnings) {
  const auto set = record.diversity_set(schema);
  if (set.size() < 2) {
    if (warnings)
      warnings->push_back(record.file_name() + ": fewer than two distinct genomes, diversity set to 0");
    return 0.0;
  }
  return mean_pairwise_jaccard(schema, set);
}

StatsReport compute_report(const Problem& problem, const std::vector<RunRecord>& records) {
  StatsReport report;
  report.problem = problem.name();
  for (SearchMode mode : {SearchMode::SO, SearchMode::MO, SearchMode::RANDOM}) {
    ModeSummary s;
    s.mode = mode;
    for (const auto& r : records) {
      if (r.problem != problem.name() || r.mode != mode) continue;
      s.best.push_back(r.best_f1());
      if (mode != SearchMode::RANDOM) s.diversity.push_back(record_diversity(problem.schema(), r, &report.warnings));
    }
    if (s.best.empty()) continue;
    s.mean_best = mean(s.best);
    s.median_best = median(s.best);
    if (!s.diversity.empty()) s.mean_diversity = mean(s.diversity);
    report.modes.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < report.modes.size(); ++i)
    for (std::size_t j = i + 1; j < report.modes.size(); ++j)
      report.fitness.push_back(
          compare(report.modes[i].mode, report.modes[j].mode, report.modes[i].best, report.modes[j].best));
  const ModeSummary* mo = report.summary(SearchMode::MO);
  const ModeSummary* so = report.summary(SearchMode::SO);
  if (mo && so && !mo->diversity.empty() && !so->diversity.empty())
    report.diversity.push_back(compare(SearchMode::MO, SearchMode::SO, mo->diversity, so->diversity));
  return report;
}

nlohmann::json to_json(const StatsReport& report) {
  nlohmann::json modes = nlohmann::json::array();
  for (const auto& m : report.modes) {
    nlohmann::json j = {{"mode", to_string(m.mode)},
                        {"repetitions", m.best.size()},
                        {"best_f1", m.best},
                        {"mean_best_f1", m.mean_best},
                        {"median_best_f1", m.median_best}};
    if (m.mean_diversity) {
      j["diversity"] = m.diversity;
      j["mean_diversity"] = *m.mean_diversity;
    }
    modes.push_back(std::move(j));
  }
  nlohmann::json fitness = nlohmann::json::array();
  for (const auto& c : report.fitness) fitness.push_back(comparison_json(c));
  nlohmann::json diversity = nlohmann::json::array();
  for (const auto& c : report.diversity) diversity.push_back(comparison_json(c));
  return {{"problem", report.problem},
          {"modes", modes},
          {"fitness_comparisons", fitness},
          {"diversity_comparisons", diversity},
          {"warnings", report.warnings}};
}

std::vector<std::filesystem::path> emit_outputs(const Problem& problem, const std::vector<RunRecord>& records,
                                                const StatsReport& report, const std::filesystem::path& out_dir,
                                                std::size_t top_exports) {
  std::vector<std::filesystem::path> written;
  std::filesystem::create_directories(out_dir);

  const auto summary_path = out_dir / (problem.name() + "_summary.csv");
  {
    auto out = open_out(summary_path);
    out << "problem,mode,repetition,seed,evaluations,generations,best_f1,diversity\n";
    for (const auto& r : records) {
      if (r.problem != problem.name()) continue;
      out << r.problem << ',' << to_string(r.mode) << ',' << r.repetition << ',' << r.seed << ','
          << r.result.at("evaluations_used").get<long>() << ',' << r.history().size() << ',' << r.best_f1() << ',';
      if (r.mode != SearchMode::RANDOM) out << record_diversity(problem.schema(), r, nullptr);
      out << '\n';
    }
  }
  written.push_back(summary_path);

  const auto report_path = out_dir / (problem.name() + "_report.json");
  {
    auto out = open_out(report_path);
    out << to_json(report).dump(2) << '\n';
  }
  written.push_back(report_path);

  const auto convergence_dir = out_dir / "convergence";
  std::filesystem::create_directories(convergence_dir);
  for (const auto& r : records) {
    if (r.problem != problem.name()) continue;
    auto path = convergence_dir / r.file_name();
    path.replace_extension(".csv");
    auto out = open_out(path);
    out << "generation,best_f1\n";
    const auto history = r.history();
    for (std::size_t g = 0; g < history.size(); ++g) out << g << ',' << history[g] << '\n';
    written.push_back(path);
  }

  if (top_exports > 0) {
    // Fittest distinct genomes over every record's best and top lists.
    std::vector<Individual> pool;
    for (const auto& r : records) {
      if (r.problem != problem.name()) continue;
      pool.push_back(individual_from_json(problem.schema(), r.result.at("best")));
      for (const auto& doc : r.result.at("top")) pool.push_back(individual_from_json(problem.schema(), doc));
    }
    const auto exports_dir = out_dir / "exports";
    std::filesystem::create_directories(exports_dir);
    const auto top = fittest_distinct(pool, top_exports);
    for (std::size_t k = 0; k < top.size(); ++k) {
      const auto files =
          problem.export_scenario(top[k].genome, exports_dir / (problem.name() + "_top" + std::to_string(k + 1)));
      written.insert(written.end(), files.begin(), files.end());
    }
  }
  return written;
}

}  // namespace scengen::harness
