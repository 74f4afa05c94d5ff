#pragma once

#include <cstddef>
#include <vector>

#include "common/random.hpp"
#include "scenario/schema.hpp"

namespace scengen {

/// Markov chain over the values of one designated attribute.
struct MarkovChain {
  std::size_t attribute = 0;
  std::vector<double> states;
  std::vector<std::vector<double>> transition;  // row-stochastic, states x states
  std::vector<double> initial;

  /// Throws Error(invalid_argument) on shape or probability problems.
  void validate() const;
};

/// Uniform length in [min_elements, max_elements], uniform attribute values.
TestCase random_test_case(const ScenarioSchema& schema, Rng& rng);

/// The chain's attribute follows a realization of the chain; every other
/// attribute is drawn uniformly. Throws when a chain state is outside the
/// attribute's domain.
TestCase markov_test_case(const ScenarioSchema& schema, const MarkovChain& chain, Rng& rng);

}  // namespace scengen
