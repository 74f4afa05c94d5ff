#include <fstream>

#include "common/error.hpp"
#include "scenario/serialize.hpp"
#include "thermostat/thermostat.hpp"

namespace scengen::thermostat {

ThermostatProblem::ThermostatProblem(CoefficientTable table) : schema_(make_schema()), table_(std::move(table)) {
  for (const auto& value : std::get<DiscreteSet>(schema_.attribute(kMode).domain()).values)
    if (!table_.contains(static_cast<int>(value)))
      throw Error(ErrorCode::invalid_argument, "coefficient table lacks mode " + std::to_string(static_cast<int>(value)));
}

EvolutionConfig ThermostatProblem::default_config() const {
  EvolutionConfig c;
  c.population_size = 250;
  c.n_offspring = 250;
  c.mutation_rate = 0.4;
  c.crossover_rate = 1.0;
  c.eval_budget = 50000;
  c.alpha = kAlpha;
  c.init = InitMode::UNIFORM;
  return c;
}

std::vector<std::filesystem::path> ThermostatProblem::export_scenario(const TestCase& tc,
                                                                      const std::filesystem::path& prefix) const {
  std::filesystem::path schedule = prefix.string() + "_schedule.json";
  std::filesystem::path trace = prefix.string() + "_trace.csv";
  {
    std::ofstream out(schedule);
    if (!out) throw Error(ErrorCode::io, "cannot write " + schedule.string());
    out << test_case_to_json(schema_, tc).dump(2) << '\n';
  }
  write_trace_csv(simulate(tc, table_), trace);
  return {schedule, trace};
}

}  // namespace scengen::thermostat
