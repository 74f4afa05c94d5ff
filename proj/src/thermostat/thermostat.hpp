#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "evolution/problem.hpp"
#include "scenario/schema.hpp"

namespace scengen::thermostat {

// Attribute order in the thermostat schema.
inline constexpr std::size_t kSetpoint = 0;  // goal temperature, deg C
inline constexpr std::size_t kDuration = 1;  // minutes
inline constexpr std::size_t kMode = 2;      // operating mode (model id)

/// Schedules must total strictly less than one day.
inline constexpr double kDayMinutes = 1440.0;
/// Adjacent setpoints must differ by strictly less than this.
inline constexpr double kMaxSetpointStep = 5.0;
/// C1 threshold on the RMSE fitness.
inline constexpr double kAlpha = 1.5;

/// Exponential on/off room model for one operating mode.
struct ModelCoefficients {
  double k_on1 = 0.0;   // deg C
  double k_on2 = 0.0;   // 1/min
  double k_off1 = 0.0;  // deg C
  double k_off2 = 0.0;  // 1/min

  bool positive() const { return k_on1 > 0 && k_on2 > 0 && k_off1 > 0 && k_off2 > 0; }
};

using CoefficientTable = std::map<int, ModelCoefficients>;

/// Modes 1-3 are the measured models. Modes 4-7 are synthetic blends of
/// those three (4 = 1|2, 5 = 2|3, 6 = 1|3, 7 = mean of all), since only
/// three coefficient sets were ever measured.
CoefficientTable default_coefficients();

ScenarioSchema make_schema();

enum class Heater { off, on };

struct Schedule {
  std::vector<double> setpoints;  // one per minute
  std::vector<int> modes;         // active model per minute
};

/// Element i contributes duration_i minutes at setpoint_i. Throws on an
/// empty test case.
Schedule decode_schedule(const TestCase& tc);

enum class Restriction { none, total_duration, setpoint_step };

struct RestrictionCheck {
  Restriction violated = Restriction::none;
  std::string reason;

  bool feasible() const { return violated == Restriction::none; }
};

/// Total duration < 1440 min, then |setpoint_i - setpoint_i+1| < 5.
RestrictionCheck check_restrictions(const TestCase& tc);

/// Heating branch: k_on1 * (1 - exp(-k_on2 * t)) + t0.
double on_response(const ModelCoefficients& c, double t0, double t);
/// Cooling branch: k_off1 * exp(-k_off2 * t) + t0 - k_off1.
double off_response(const ModelCoefficients& c, double t0, double t);

struct ThermostatTrace {
  std::vector<double> setpoints;
  std::vector<double> outputs;
  std::vector<std::pair<int, Heater>> mode_switches;  // (minute, new heater state)
};

/// Minute-step bang-bang simulation with zero deadband. The room starts at
/// the first setpoint. Every heater switch restarts the exponential from the
/// current temperature. Throws when a mode has no coefficients.
ThermostatTrace simulate(const TestCase& tc, const CoefficientTable& table);

/// RMSE between output and schedule; 0 when a restriction is violated.
double fitness_f1(const TestCase& tc, const CoefficientTable& table);

struct Sample {
  double t = 0.0;            // minutes since the switch
  double temperature = 0.0;  // deg C
};

struct FitResult {
  ModelCoefficients coefficients;  // the branch not fitted is copied from the guess
  double start_temperature = 0.0;  // fitted T0
  double rmse = 0.0;
  int iterations = 0;
};

/// Least-squares fit of one branch (and its starting temperature) with the
/// Nelder-Mead minimizer. Throws Error(degenerate_fit) when the samples show
/// no dynamics and Error(not_converged) when the iteration cap is hit.
FitResult fit_coefficients(std::span<const Sample> samples, Heater branch, const ModelCoefficients& initial_guess,
                           int max_iterations = 20000);

CoefficientTable load_coefficients(const std::filesystem::path& path);
void save_coefficients(const CoefficientTable& table, const std::filesystem::path& path);
void write_trace_csv(const ThermostatTrace& trace, const std::filesystem::path& path);

class ThermostatProblem final : public Problem {
 public:
  explicit ThermostatProblem(CoefficientTable table = default_coefficients());

  std::string name() const override { return "thermostat"; }
  const ScenarioSchema& schema() const override { return schema_; }
  double fitness(const TestCase& tc) const override { return fitness_f1(tc, table_); }
  EvolutionConfig default_config() const override;
  std::vector<std::filesystem::path> export_scenario(const TestCase& tc,
                                                     const std::filesystem::path& prefix) const override;

  const CoefficientTable& coefficients() const { return table_; }

 private:
  ScenarioSchema schema_;
  CoefficientTable table_;
};

}  // namespace scengen::thermostat
