#include <fstream>

#include "common/error.hpp"
#include "lkas/lkas.hpp"
#include "scenario/serialize.hpp"

namespace scengen::lkas {

LkasProblem::LkasProblem(CarParams params)
    : schema_(make_schema()), chain_(default_markov_chain()), params_(params) {
  params_.validate();
  chain_.validate();
}

EvolutionConfig LkasProblem::default_config() const {
  EvolutionConfig c;
  c.population_size = 500;
  c.n_offspring = 500;
  c.mutation_rate = 0.4;
  c.crossover_rate = 1.0;
  c.eval_budget = 100000;
  c.alpha = kAlpha;
  c.init = InitMode::MARKOV;
  return c;
}

std::vector<std::filesystem::path> LkasProblem::export_scenario(const TestCase& tc,
                                                                const std::filesystem::path& prefix) const {
  std::vector<std::filesystem::path> written;
  std::filesystem::path genome = prefix.string() + "_genome.json";
  {
    std::ofstream out(genome);
    if (!out) throw Error(ErrorCode::io, "cannot write " + genome.string());
    out << test_case_to_json(schema_, tc).dump(2) << '\n';
  }
  written.push_back(genome);

  const Polyline dense = interpolate(decode_road(tc));
  std::filesystem::path road = prefix.string() + "_road.json";
  write_road_json(dense, road);
  written.push_back(road);

  if (validate_road(dense).valid()) {
    std::filesystem::path trajectory = prefix.string() + "_trajectory.csv";
    write_trajectory_csv(simulate_car(dense, params_), trajectory);
    written.push_back(trajectory);
  }
  return written;
}

}  // namespace scengen::lkas
