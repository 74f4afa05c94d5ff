#include <fstream>

#include "common/error.hpp"
#include "robot/robot.hpp"
#include "scenario/serialize.hpp"

namespace scengen::robot {

namespace {
constexpr double kWaypointEpsilon = 0.5;
}

RobotProblem::RobotProblem() : schema_(make_schema()) {}

EvolutionConfig RobotProblem::default_config() const {
  const GridMap map = GridMap::standard();
  EvolutionConfig c;
  c.population_size = 100;
  c.n_offspring = 50;
  c.mutation_rate = 0.4;
  c.crossover_rate = 1.0;
  c.eval_budget = 20000;
  c.alpha = 1.5 * octile_distance(map.start(), map.goal());
  c.init = InitMode::UNIFORM;
  return c;
}

std::vector<std::filesystem::path> RobotProblem::export_scenario(const TestCase& tc,
                                                                 const std::filesystem::path& prefix) const {
  const GridMap map = decode_map(tc);
  std::vector<std::filesystem::path> written;

  std::filesystem::path genome = prefix.string() + "_map.json";
  {
    std::ofstream out(genome);
    if (!out) throw Error(ErrorCode::io, "cannot write " + genome.string());
    out << test_case_to_json(schema_, tc).dump(2) << '\n';
  }
  written.push_back(genome);

  std::filesystem::path bitmap = prefix.string() + "_map.pgm";
  write_pgm(map, bitmap);
  written.push_back(bitmap);

  std::filesystem::path world = prefix.string() + ".world";
  write_world(map, world);
  written.push_back(world);

  if (const auto path = astar(map)) {
    std::filesystem::path waypoints = prefix.string() + "_waypoints.csv";
    write_waypoints_csv(rdp_simplify(*path, kWaypointEpsilon), waypoints);
    written.push_back(waypoints);
  }
  return written;
}

}  // namespace scengen::robot
