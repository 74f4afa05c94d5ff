#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <set>

#include "common/error.hpp"
#include "evolution/serialize.hpp"
#include "harness/harness.hpp"
#include "lkas/lkas.hpp"
#include "scenario/jaccard.hpp"
#include "scenario/serialize.hpp"
#include "support/oracles.hpp"
#include "thermostat/thermostat.hpp"

using namespace scengen;
using namespace scengen::harness;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("scengen_harness_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

ExperimentConfig small_thermostat(const std::filesystem::path& out, int reps) {
  ExperimentConfig c;
  c.problem = "thermostat";
  c.repetitions = reps;
  c.overrides = {{"population_size", 10}, {"n_offspring", 10}, {"eval_budget", 100}};
  c.output_dir = out;
  return c;
}

// Every way of drawing a sample of size n from {0, .., 3} (with ties).
std::vector<std::vector<double>> samples_of(std::size_t n, Rng& rng, int count) {
  std::vector<std::vector<double>> out;
  for (int i = 0; i < count; ++i) {
    std::vector<double> s(n);
    for (auto& v : s) v = static_cast<double>(uniform_int(rng, 0, 3));
    out.push_back(s);
  }
  return out;
}

nlohmann::json front_of(const ScenarioSchema& schema, const std::vector<TestCase>& cases) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& tc : cases) {
    Individual ind;
    ind.genome = tc;
    ind.f1 = -3.0;
    arr.push_back(individual_to_json(schema, ind));
  }
  return arr;
}

TestCase schedule(std::initializer_list<std::array<double, 3>> rows) {
  TestCase tc;
  for (const auto& r : rows) tc.elements.push_back(Element{{r[0], r[1], r[2]}});
  return tc;
}

}  // namespace

TEST(Stats, MannWhitneyMatchesOracles) {
  Rng rng(81);
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t m = 1; m <= 6; ++m)
      for (const auto& xs : samples_of(n, rng, 6))
        for (const auto& ys : samples_of(m, rng, 3)) {
          const auto r = mann_whitney_u(xs, ys);
          EXPECT_TRUE(r.exact);
          EXPECT_EQ(r.u, oracle::u_statistic(xs, ys));
          EXPECT_NEAR(r.p_value, oracle::permutation_p(xs, ys), 1e-12);
          EXPECT_EQ(cliffs_delta(xs, ys), oracle::cliffs_delta(xs, ys));
        }
}

TEST(Stats, MannWhitneyExamples) {
  const std::vector<double> same{3, 1, 4, 1, 5};
  EXPECT_GE(mann_whitney_u(same, same).p_value, 0.99);

  std::vector<double> low, high;
  for (int i = 1; i <= 10; ++i) {
    low.push_back(i);
    high.push_back(100 + i);
  }
  const auto r = mann_whitney_u(low, high);
  EXPECT_FALSE(r.exact);
  EXPECT_EQ(r.u, 0.0);
  EXPECT_LT(r.p_value, 0.001);

  const std::vector<double> xs{1.5, 2.0, 2.5}, ys{2.0, 3.0, 4.5};
  EXPECT_NEAR(mann_whitney_u(xs, ys).p_value, oracle::permutation_p(xs, ys), 1e-12);

  // all values tied: zero variance
  const std::vector<double> flat(12, 2.0);
  EXPECT_EQ(mann_whitney_u(flat, flat).p_value, 1.0);
  EXPECT_THROW(mann_whitney_u({}, same), Error);
}

TEST(Stats, Symmetry) {
  Rng rng(82);
  for (int i = 0; i < 50; ++i) {
    std::vector<double> xs(3 + uniform_index(rng, 12)), ys(3 + uniform_index(rng, 12));
    for (auto& v : xs) v = static_cast<double>(uniform_int(rng, 0, 20));
    for (auto& v : ys) v = static_cast<double>(uniform_int(rng, 0, 20));
    EXPECT_NEAR(mann_whitney_u(xs, ys).p_value, mann_whitney_u(ys, xs).p_value, 1e-12);
    EXPECT_EQ(cliffs_delta(xs, ys), -cliffs_delta(ys, xs));
    const auto r = mann_whitney_u(xs, ys);
    EXPECT_GE(r.p_value, 0.0);
    EXPECT_LE(r.p_value, 1.0);
  }
}

TEST(Stats, CliffsDeltaExamplesAndBands) {
  EXPECT_EQ(cliffs_delta(std::vector<double>{5, 6, 7}, std::vector<double>{1, 2}), 1.0);
  EXPECT_EQ(magnitude(1.0), "large");
  EXPECT_EQ(cliffs_delta(std::vector<double>{1, 2}, std::vector<double>{1, 2}), 0.0);
  EXPECT_EQ(magnitude(0.0), "negligible");
  const double d = cliffs_delta(std::vector<double>{1, 2, 3}, std::vector<double>{2, 3, 4});
  EXPECT_NEAR(d, -5.0 / 9.0, 1e-15);
  EXPECT_EQ(magnitude(d), "large");
  EXPECT_EQ(magnitude(0.146), "negligible");
  EXPECT_EQ(magnitude(0.147), "small");
  EXPECT_EQ(magnitude(-0.33), "medium");
  EXPECT_EQ(magnitude(0.474), "large");
  EXPECT_LT(magnitude_rank("small"), magnitude_rank("medium"));
  EXPECT_THROW(magnitude_rank("huge"), Error);
  EXPECT_EQ(median(std::vector<double>{4, 1, 3, 2}), 2.5);
  EXPECT_EQ(mean(std::vector<double>{4, 1, 3, 2}), 2.5);
}

TEST(Diversity, FrontExamples) {
  const auto schema = thermostat::make_schema();
  RunRecord r;
  r.problem = "thermostat";
  r.mode = SearchMode::MO;

  std::vector<TestCase> seven;
  for (int i = 0; i < 7; ++i) seven.push_back(schedule({{16.0 + i, 60, 1}, {17.0 + i, 60, 1}}));
  seven[3] = schedule({{16, 60, 1}, {20, 60, 2}});
  r.result = {{"pareto_front", front_of(schema, seven)}};
  double sum = 0.0;
  int pairs = 0;
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j, ++pairs) sum += jaccard_distance(schema, seven[i], seven[j]);
  EXPECT_EQ(pairs, 21);
  std::vector<std::string> warnings;
  EXPECT_NEAR(record_diversity(schema, r, &warnings), sum / 21.0, 1e-15);
  EXPECT_TRUE(warnings.empty());

  std::vector<TestCase> disjoint{schedule({{16, 60, 1}, {17, 60, 1}}), schedule({{20, 90, 2}, {21, 90, 2}}),
                                 schedule({{24, 120, 3}, {25, 120, 3}})};
  r.result = {{"pareto_front", front_of(schema, disjoint)}};
  EXPECT_EQ(record_diversity(schema, r, &warnings), 1.0);

  std::vector<TestCase> clones(4, disjoint[0]);
  r.result = {{"pareto_front", front_of(schema, clones)}};
  EXPECT_EQ(record_diversity(schema, r, &warnings), 0.0);
  EXPECT_EQ(warnings.size(), 1u);

  EXPECT_EQ(mean_pairwise_jaccard(schema, {disjoint[0]}), 0.0);
}

TEST(ExperimentConfig, ParsingAndSeeds) {
  const auto c = experiment_config_from_json(
      {{"problem", "robot"}, {"modes", {"MO", "RANDOM"}}, {"repetitions", 3}, {"seed_base", 40}});
  EXPECT_EQ(c.modes.size(), 2u);
  EXPECT_EQ(c.seed_for(0, 0), 40u);
  EXPECT_EQ(c.seed_for(2, 1), 45u);
  EXPECT_THROW(experiment_config_from_json({{"problem", "robot"}, {"bogus", 1}}), Error);
  EXPECT_EQ(to_json(experiment_config_from_json(to_json(c))), to_json(c));

  ExperimentConfig bad;
  bad.problem = "submarine";
  EXPECT_THROW(bad.validate(), Error);
  bad.problem = "thermostat";
  bad.modes = {SearchMode::SO, SearchMode::SO};
  EXPECT_THROW(bad.validate(), Error);

  ExperimentConfig full;
  full.problem = "lkas";
  full.repetitions = 10;
  std::set<std::uint64_t> seeds;
  for (int rep = 0; rep < 10; ++rep)
    for (std::size_t mi = 0; mi < 3; ++mi) seeds.insert(full.seed_for(rep, mi));
  EXPECT_EQ(seeds.size(), 30u);
}

TEST(Experiment, SingleRunProducesOneRecord) {
  auto c = small_thermostat(scratch("single"), 1);
  c.modes = {SearchMode::SO};
  const auto outcome = run_experiment(c);
  EXPECT_TRUE(outcome.failures.empty());
  ASSERT_EQ(outcome.records.size(), 1u);
  EXPECT_TRUE(std::filesystem::exists(c.output_dir / "records" / "thermostat_SO_0.json"));
  EXPECT_TRUE(std::filesystem::exists(c.output_dir / "timings.csv"));
}

TEST(Experiment, DeterministicRecordsAndResume) {
  const auto a = small_thermostat(scratch("rerun_a"), 2);
  const auto b = small_thermostat(scratch("rerun_b"), 2);
  const auto oa = run_experiment(a);
  const auto ob = run_experiment(b);
  ASSERT_EQ(oa.records.size(), 6u);
  std::set<std::uint64_t> seeds;
  for (const auto& r : oa.records) {
    seeds.insert(r.seed);
    EXPECT_EQ(slurp(a.output_dir / "records" / r.file_name()), slurp(b.output_dir / "records" / r.file_name()));
  }
  EXPECT_EQ(seeds.size(), 6u);

  // resume: drop one record and run again
  std::filesystem::remove(a.output_dir / "records" / "thermostat_MO_1.json");
  int lines = 0;
  const auto resumed = run_experiment(a, [&](const std::string&) { ++lines; });
  EXPECT_EQ(resumed.reused, 5);
  EXPECT_EQ(lines, 6);
  EXPECT_EQ(slurp(a.output_dir / "records" / "thermostat_MO_1.json"),
            slurp(b.output_dir / "records" / "thermostat_MO_1.json"));

  const auto loaded = load_records(a.output_dir, "thermostat");
  ASSERT_EQ(loaded.size(), 6u);
  EXPECT_EQ(loaded.front().mode, SearchMode::SO);
  EXPECT_TRUE(load_records(a.output_dir, "robot").empty());
  EXPECT_THROW(load_records(a.output_dir / "missing"), Error);
}

TEST(Report, ComputeAndEmit) {
  auto c = small_thermostat(scratch("report"), 3);
  const auto outcome = run_experiment(c);
  const auto problem = make_problem("thermostat");
  const auto report = compute_report(*problem, outcome.records);
  ASSERT_EQ(report.modes.size(), 3u);
  EXPECT_EQ(report.fitness.size(), 3u);
  ASSERT_EQ(report.diversity.size(), 1u);
  const auto* so = report.summary(SearchMode::SO);
  ASSERT_NE(so, nullptr);
  EXPECT_EQ(so->best.size(), 3u);
  EXPECT_TRUE(so->mean_diversity.has_value());
  EXPECT_FALSE(report.summary(SearchMode::RANDOM)->mean_diversity.has_value());
  EXPECT_NE(report.fitness_comparison(SearchMode::SO, SearchMode::RANDOM), nullptr);

  const auto files = emit_outputs(*problem, outcome.records, report, c.output_dir, 2);
  const std::string summary = slurp(c.output_dir / "thermostat_summary.csv");
  EXPECT_EQ(std::count(summary.begin(), summary.end(), '\n'), 1 + 9);
  const auto doc = nlohmann::json::parse(slurp(c.output_dir / "thermostat_report.json"));
  EXPECT_EQ(doc.at("problem"), "thermostat");
  for (const auto& r : outcome.records) {
    auto conv = c.output_dir / "convergence" / r.file_name();
    conv.replace_extension(".csv");
    const std::string text = slurp(conv);
    EXPECT_EQ(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')), 1 + r.history().size());
  }
  EXPECT_TRUE(std::filesystem::exists(c.output_dir / "exports" / "thermostat_top1_schedule.json"));
  EXPECT_TRUE(std::filesystem::exists(c.output_dir / "exports" / "thermostat_top2_schedule.json"));
  EXPECT_FALSE(std::filesystem::exists(c.output_dir / "exports" / "thermostat_top3_schedule.json"));
  EXPECT_GT(files.size(), 9u);
}

TEST(Report, TopLkasRoadsExported) {
  ExperimentConfig c;
  c.problem = "lkas";
  c.modes = {SearchMode::MO};
  c.overrides = {{"population_size", 20}, {"n_offspring", 20}, {"eval_budget", 200}};
  c.output_dir = scratch("lkas_export");
  const auto outcome = run_experiment(c);
  ASSERT_EQ(outcome.records.size(), 1u);
  const auto problem = make_problem("lkas");
  emit_outputs(*problem, outcome.records, compute_report(*problem, outcome.records), c.output_dir, 3);
  for (int k = 1; k <= 3; ++k) {
    const auto road = c.output_dir / "exports" / ("lkas_top" + std::to_string(k) + "_road.json");
    ASSERT_TRUE(std::filesystem::exists(road)) << road;
    const auto points = lkas::read_road_json(road);
    EXPECT_GT(points.size(), 2u);
    EXPECT_TRUE(lkas::validate_road(points).valid());
  }
}

TEST(Problems, Registry) {
  EXPECT_EQ(problem_names(), (std::vector<std::string>{"thermostat", "robot", "lkas"}));
  for (const auto& name : problem_names()) EXPECT_EQ(make_problem(name)->name(), name);
  EXPECT_THROW(make_problem("boat"), Error);
}
