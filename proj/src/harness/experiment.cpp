#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <tuple>

#include "common/error.hpp"
#include "evolution/search.hpp"
#include "evolution/serialize.hpp"
#include "harness/harness.hpp"
#include "scenario/serialize.hpp"

namespace scengen::harness {

namespace {

constexpr std::size_t kTopK = 10;

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot read " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::io, path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error(ErrorCode::io, "cannot write " + tmp);
    out << text;
    if (!out) throw Error(ErrorCode::io, "failed writing " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

void ExperimentConfig::validate() const {
  make_problem(problem);
  if (modes.empty()) throw Error(ErrorCode::invalid_argument, "experiment needs at least one mode");
  if (std::set<SearchMode>(modes.begin(), modes.end()).size() != modes.size())
    throw Error(ErrorCode::invalid_argument, "experiment modes must be distinct");
  if (repetitions < 1) throw Error(ErrorCode::invalid_argument, "repetitions must be at least 1");
  if (!overrides.is_object()) throw Error(ErrorCode::invalid_argument, "overrides must be an object");
  if (output_dir.empty()) throw Error(ErrorCode::invalid_argument, "output directory missing");
}

std::uint64_t ExperimentConfig::seed_for(int repetition, std::size_t mode_index) const {
  return seed_base + static_cast<std::uint64_t>(repetition) * modes.size() + mode_index;
}

ExperimentConfig experiment_config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::invalid_argument, "experiment config must be an object");
  ExperimentConfig c;
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "problem") c.problem = value.get<std::string>();
      else if (key == "modes") {
        c.modes.clear();
        for (const auto& m : value) c.modes.push_back(parse_search_mode(m.get<std::string>()));
      } else if (key == "repetitions") c.repetitions = value.get<int>();
      else if (key == "overrides") c.overrides = value;
      else if (key == "seed_base") c.seed_base = value.get<std::uint64_t>();
      else if (key == "output_dir") c.output_dir = value.get<std::string>();
      else throw Error(ErrorCode::invalid_argument, "unknown experiment field '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::invalid_argument, std::string("bad experiment config: ") + e.what());
  }
  return c;
}

nlohmann::json to_json(const ExperimentConfig& config) {
  nlohmann::json modes = nlohmann::json::array();
  for (SearchMode m : config.modes) modes.push_back(to_string(m));
  return {{"problem", config.problem},        {"modes", modes},
          {"repetitions", config.repetitions}, {"overrides", config.overrides},
          {"seed_base", config.seed_base},     {"output_dir", config.output_dir.string()}};
}

double RunRecord::best_f1() const { return result.at("best").at("f1").get<double>(); }

std::vector<double> RunRecord::history() const { return result.at("history").get<std::vector<double>>(); }

std::vector<TestCase> RunRecord::diversity_set(const ScenarioSchema& schema) const {
  const char* key = mode == SearchMode::MO ? "pareto_front" : "top";
  std::vector<TestCase> out;
  for (const auto& ind : result.at(key)) {
    TestCase tc = test_case_from_json(schema, ind.at("genome"));
    if (std::find(out.begin(), out.end(), tc) == out.end()) out.push_back(std::move(tc));
  }
  return out;
}

nlohmann::json RunRecord::to_json() const {
  return {{"problem", problem}, {"mode", to_string(mode)}, {"repetition", repetition}, {"seed", seed},
          {"result", result}};
}

RunRecord RunRecord::from_json(const nlohmann::json& doc) {
  RunRecord r;
  try {
    r.problem = doc.at("problem").get<std::string>();
    r.mode = parse_search_mode(doc.at("mode").get<std::string>());
    r.repetition = doc.at("repetition").get<int>();
    r.seed = doc.at("seed").get<std::uint64_t>();
    r.result = doc.at("result");
    r.result.at("best").at("f1");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::io, std::string("malformed run record: ") + e.what());
  }
  return r;
}

std::string RunRecord::file_name() const {
  return problem + "_" + to_string(mode) + "_" + std::to_string(repetition) + ".json";
}

ExperimentOutcome run_experiment(const ExperimentConfig& config, const ProgressFn& progress) {
  config.validate();
  const auto problem = make_problem(config.problem);
  const EvolutionConfig base = apply_overrides(problem->default_config(), config.overrides);

  const auto records_dir = config.output_dir / "records";
  std::filesystem::create_directories(records_dir);
  const auto timings_path = config.output_dir / "timings.csv";
  const bool new_timings = !std::filesystem::exists(timings_path);
  std::ofstream timings(timings_path, std::ios::app);
  if (!timings) throw Error(ErrorCode::io, "cannot write " + timings_path.string());
  if (new_timings) timings << "problem,mode,repetition,seed,evaluations,wall_time_s\n";

  ExperimentOutcome outcome;
  for (int rep = 0; rep < config.repetitions; ++rep) {
    for (std::size_t mi = 0; mi < config.modes.size(); ++mi) {
      RunRecord record;
      record.problem = config.problem;
      record.mode = config.modes[mi];
      record.repetition = rep;
      record.seed = config.seed_for(rep, mi);
      const auto path = records_dir / record.file_name();
      const std::string label = record.file_name() + " (seed " + std::to_string(record.seed) + ")";

      if (std::filesystem::exists(path)) {
        try {
          RunRecord stored = RunRecord::from_json(read_json(path));
          if (stored.seed == record.seed && stored.mode == record.mode) {
            outcome.records.push_back(std::move(stored));
            ++outcome.reused;
            if (progress) progress("reused " + label);
            continue;
          }
        } catch (const Error&) {
          // unreadable leftovers are recomputed
        }
      }

      try {
        EvolutionConfig ec = base;
        ec.mode = record.mode;
        ec.seed = record.seed;
        const SearchResult result = run_search(*problem, ec);
        record.result = search_result_to_json(problem->schema(), result, kTopK);
        write_text(path, record.to_json().dump(1) + "\n");
        timings << record.problem << ',' << to_string(record.mode) << ',' << rep << ',' << record.seed << ','
                << result.evaluations_used << ',' << std::setprecision(6) << result.wall_time << '\n';
        timings.flush();
        if (progress) {
          std::ostringstream os;
          os << "finished " << label << ": best " << record.best_f1() << " in " << std::setprecision(3)
             << result.wall_time << " s";
          progress(os.str());
        }
        outcome.records.push_back(std::move(record));
      } catch (const std::exception& e) {
        outcome.failures.push_back(label + ": " + e.what());
        if (progress) progress("FAILED " + label + ": " + e.what());
      }
    }
  }
  return outcome;
}

std::vector<RunRecord> load_records(const std::filesystem::path& dir, std::string_view problem) {
  const auto records_dir = dir / "records";
  if (!std::filesystem::is_directory(records_dir))
    throw Error(ErrorCode::io, records_dir.string() + " is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(records_dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<RunRecord> out;
  for (const auto& f : files) {
    RunRecord r = RunRecord::from_json(read_json(f));
    if (problem.empty() || r.problem == problem) out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(), [](const RunRecord& a, const RunRecord& b) {
    return std::tie(a.problem, a.mode, a.repetition) < std::tie(b.problem, b.mode, b.repetition);
  });
  return out;
}

}  // namespace scengen::harness
