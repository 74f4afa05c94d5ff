#include "common/error.hpp"
#include "harness/harness.hpp"
#include "lkas/lkas.hpp"
#include "robot/robot.hpp"
#include "thermostat/thermostat.hpp"

namespace scengen::harness {

std::unique_ptr<Problem> make_problem(std::string_view name) {
  if (name == "thermostat") return std::make_unique<thermostat::ThermostatProblem>();
  if (name == "robot") return std::make_unique<robot::RobotProblem>();
  if (name == "lkas") return std::make_unique<lkas::LkasProblem>();
  throw Error(ErrorCode::invalid_argument, "unknown problem '" + std::string(name) + "'");
}

std::vector<std::string> problem_names() { return {"thermostat", "robot", "lkas"}; }

}  // namespace scengen::harness
