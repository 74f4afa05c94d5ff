#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "evolution/config.hpp"
#include "scenario/generate.hpp"
#include "scenario/schema.hpp"

namespace scengen {

/// One case study: the scenario schema, the surrogate-based fault-revealing
/// power, and the exporters that turn a scenario into simulator input.
class Problem {
 public:
  virtual ~Problem() = default;

  virtual std::string name() const = 0;
  virtual const ScenarioSchema& schema() const = 0;

  /// Raw fault-revealing power (>= 0). Scenarios violating the problem's
  /// restrictions score 0.
  virtual double fitness(const TestCase& tc) const = 0;

  /// Search defaults, including the problem's C1 threshold.
  virtual EvolutionConfig default_config() const = 0;

  virtual const MarkovChain* markov_chain() const { return nullptr; }

  /// Writes simulator-facing files for `tc` and returns their paths.
  virtual std::vector<std::filesystem::path> export_scenario(const TestCase& tc,
                                                             const std::filesystem::path& prefix) const = 0;
};

}  // namespace scengen
