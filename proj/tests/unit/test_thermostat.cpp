#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "common/error.hpp"
#include "scenario/generate.hpp"
#include "thermostat/thermostat.hpp"

using namespace scengen;
using namespace scengen::thermostat;

namespace {

TestCase schedule(std::initializer_list<std::array<double, 3>> rows) {
  TestCase tc;
  for (const auto& r : rows) tc.elements.push_back(Element{{r[0], r[1], r[2]}});
  return tc;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("scengen_thermo_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(ThermostatDecode, ExpandsElementsPerMinute) {
  const auto one = decode_schedule(schedule({{20, 60, 1}}));
  ASSERT_EQ(one.setpoints.size(), 60u);
  for (double s : one.setpoints) EXPECT_EQ(s, 20.0);

  const auto two = decode_schedule(schedule({{17, 60, 1}, {22, 75, 3}}));
  ASSERT_EQ(two.setpoints.size(), 135u);
  EXPECT_EQ(two.setpoints[59], 17.0);
  EXPECT_EQ(two.setpoints[60], 22.0);
  EXPECT_EQ(two.setpoints[134], 22.0);
  EXPECT_EQ(two.modes[59], 1);
  EXPECT_EQ(two.modes[60], 3);
  EXPECT_THROW(decode_schedule(TestCase{}), Error);
}

TEST(ThermostatRestrictions, StrictBoundaries) {
  TestCase day;
  for (int i = 0; i < 24; ++i) day.elements.push_back(Element{{20.0, 60.0, 1.0}});
  EXPECT_EQ(check_restrictions(day).violated, Restriction::total_duration);
  day.elements.pop_back();
  EXPECT_TRUE(check_restrictions(day).feasible());

  EXPECT_EQ(check_restrictions(schedule({{17, 60, 1}, {22, 60, 1}})).violated, Restriction::setpoint_step);
  EXPECT_TRUE(check_restrictions(schedule({{17, 60, 1}, {21, 60, 1}})).feasible());
  EXPECT_TRUE(check_restrictions(schedule({{17, 100, 1}, {20, 100, 1}, {17, 100, 1}})).feasible());
  day.elements.push_back(Element{{20.0, 60.0, 1.0}});
  EXPECT_EQ(fitness_f1(day, default_coefficients()), 0.0);
}

TEST(ThermostatModel, BranchesStartAtT0) {
  for (const auto& [mode, c] : default_coefficients()) {
    for (double t0 : {-3.0, 0.0, 17.0, 21.25, 22.5}) {
      EXPECT_EQ(on_response(c, t0, 0.0), t0) << mode;
      EXPECT_EQ(off_response(c, t0, 0.0), t0) << mode;
    }
    for (int i = 0; i <= 1000; ++i) {
      const double t0 = 15.0 + 0.0123 * i;
      ASSERT_EQ(on_response(c, t0, 0.0), t0) << mode << " " << t0;
      ASSERT_EQ(off_response(c, t0, 0.0), t0) << mode << " " << t0;
    }
  }
}

TEST(ThermostatModel, ModelOneValues) {
  const auto c = default_coefficients().at(1);
  EXPECT_EQ(c.k_on1, 7.7);
  EXPECT_NEAR(on_response(c, 17.0, 1.0), 7.7 * (1.0 - std::exp(-0.11887928)) + 17.0, 1e-12);
  EXPECT_NEAR(on_response(c, 17.0, 1.0), 17.863, 5e-4);
  EXPECT_NEAR(on_response(c, 17.0, 120.0), 17.0 + 7.7, 0.01);
  EXPECT_NEAR(off_response(c, 20.0, 1e4), 20.0 - c.k_off1, 1e-9);
}

TEST(ThermostatModel, BranchesAreStrictlyMonotone) {
  for (const auto& [mode, c] : default_coefficients()) {
    for (int t = 0; t < 200; ++t) {
      EXPECT_LT(on_response(c, 18.0, t), on_response(c, 18.0, t + 1)) << mode;
      EXPECT_GT(off_response(c, 18.0, t), off_response(c, 18.0, t + 1)) << mode;
    }
  }
}

TEST(ThermostatSimulate, TraceShapeAndSwitches) {
  const auto tc = schedule({{18, 60, 1}, {22, 120, 2}, {19, 90, 3}});
  const auto trace = simulate(tc, default_coefficients());
  ASSERT_EQ(trace.outputs.size(), 270u);
  ASSERT_EQ(trace.setpoints.size(), 270u);
  EXPECT_EQ(trace.outputs[0], 18.0);
  ASSERT_FALSE(trace.mode_switches.empty());
  EXPECT_EQ(trace.mode_switches.front().first, 0);
  // the setpoint step to 22 turns the heater on at minute 60
  bool on_at_60 = false;
  for (const auto& [minute, state] : trace.mode_switches) on_at_60 |= minute == 60 && state == Heater::on;
  EXPECT_TRUE(on_at_60);
  EXPECT_THROW(simulate(schedule({{18, 60, 9}}), default_coefficients()), Error);
}

TEST(ThermostatSimulate, NoLargeSingleMinuteJumps) {
  const auto schema = make_schema();
  const auto table = default_coefficients();
  Rng rng(17);
  for (int n = 0; n < 300; ++n) {
    const TestCase tc = random_test_case(schema, rng);
    const auto trace = simulate(tc, table);
    for (std::size_t i = 1; i < trace.outputs.size(); ++i)
      ASSERT_LE(std::abs(trace.outputs[i] - trace.outputs[i - 1]), 2.0) << "minute " << i;
  }
}

TEST(ThermostatFitness, IsTheRmseOfTheTrace) {
  const auto table = default_coefficients();
  const auto tc = schedule({{16, 120, 1}, {20, 240, 7}, {24, 60, 4}, {21, 180, 5}});
  const auto trace = simulate(tc, table);
  double sum = 0.0;
  for (std::size_t i = 0; i < trace.outputs.size(); ++i)
    sum += (trace.outputs[i] - trace.setpoints[i]) * (trace.outputs[i] - trace.setpoints[i]);
  EXPECT_NEAR(fitness_f1(tc, table), std::sqrt(sum / static_cast<double>(trace.outputs.size())), 1e-12);
  EXPECT_GT(fitness_f1(tc, table), 0.0);
  EXPECT_EQ(fitness_f1(schedule({{16, 60, 1}, {21, 60, 1}}), table), 0.0);
}

TEST(ThermostatFit, RecoversExactCoefficients) {
  const auto truth = default_coefficients().at(1);
  const ModelCoefficients guess{5.0, 0.05, 4.0, 0.05};
  for (Heater h : {Heater::on, Heater::off}) {
    std::vector<Sample> samples;
    for (int t = 0; t <= 90; ++t)
      samples.push_back({double(t), h == Heater::on ? on_response(truth, 17.0, t) : off_response(truth, 23.0, t)});
    const auto fit = fit_coefficients(samples, h, guess);
    const double k1 = h == Heater::on ? fit.coefficients.k_on1 : fit.coefficients.k_off1;
    const double k2 = h == Heater::on ? fit.coefficients.k_on2 : fit.coefficients.k_off2;
    EXPECT_NEAR(k1 / (h == Heater::on ? truth.k_on1 : truth.k_off1), 1.0, 1e-3);
    EXPECT_NEAR(k2 / (h == Heater::on ? truth.k_on2 : truth.k_off2), 1.0, 1e-3);
    EXPECT_NEAR(fit.start_temperature, h == Heater::on ? 17.0 : 23.0, 1e-3);
    EXPECT_LT(fit.rmse, 1e-6);
  }
}

TEST(ThermostatFit, ConstantSamplesAreDegenerate) {
  std::vector<Sample> flat;
  for (int t = 0; t < 30; ++t) flat.push_back({double(t), 20.0});
  try {
    fit_coefficients(flat, Heater::on, ModelCoefficients{5.0, 0.05, 4.0, 0.05});
    FAIL() << "expected degenerate_fit";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::degenerate_fit);
  }
}

TEST(ThermostatFit, NoisySamplesStayBelowHalfADegree) {
  const auto truth = default_coefficients().at(2);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> noise(0.0, 0.25);
  std::vector<Sample> samples;
  for (int t = 0; t <= 120; ++t) samples.push_back({double(t), on_response(truth, 18.0, t) + noise(rng)});
  const auto fit = fit_coefficients(samples, Heater::on, ModelCoefficients{5.0, 0.05, 4.0, 0.05});
  EXPECT_LE(fit.rmse, 0.5);
}

TEST(ThermostatFit, RejectsBadInputs) {
  std::vector<Sample> few{{0, 1}, {1, 2}, {2, 3}};
  EXPECT_THROW(fit_coefficients(few, Heater::on, ModelCoefficients{1, 1, 1, 1}), Error);
  std::vector<Sample> enough{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  EXPECT_THROW(fit_coefficients(enough, Heater::on, ModelCoefficients{1, 0, 1, 1}), Error);
  const auto truth = default_coefficients().at(1);
  std::vector<Sample> samples;
  for (int t = 0; t <= 60; ++t) samples.push_back({double(t), on_response(truth, 17.0, t)});
  try {
    fit_coefficients(samples, Heater::on, ModelCoefficients{5.0, 0.05, 4.0, 0.05}, 5);
    FAIL() << "expected not_converged";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_converged);
  }
}

TEST(ThermostatIo, CoefficientTableRoundTrip) {
  const auto dir = scratch("io");
  const auto table = default_coefficients();
  save_coefficients(table, dir / "table.json");
  const auto back = load_coefficients(dir / "table.json");
  ASSERT_EQ(back.size(), table.size());
  for (const auto& [mode, c] : table) {
    EXPECT_EQ(back.at(mode).k_on1, c.k_on1);
    EXPECT_EQ(back.at(mode).k_off2, c.k_off2);
  }
  EXPECT_THROW(load_coefficients(dir / "missing.json"), Error);
  CoefficientTable partial{{1, table.at(1)}};
  EXPECT_THROW(ThermostatProblem{partial}, Error);
}

TEST(ThermostatProblem, SchemaAndExport) {
  ThermostatProblem p;
  EXPECT_EQ(p.schema().min_elements(), 2u);
  EXPECT_EQ(p.schema().max_elements(), 24u);
  EXPECT_EQ(p.default_config().alpha, 1.5);
  const auto dir = scratch("export");
  const auto files = p.export_scenario(schedule({{18, 60, 1}, {20, 90, 2}}), dir / "case");
  ASSERT_EQ(files.size(), 2u);
  for (const auto& f : files) EXPECT_TRUE(std::filesystem::exists(f)) << f;
}
