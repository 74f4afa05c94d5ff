#pragma once

#include <vector>

#include "evolution/config.hpp"
#include "evolution/individual.hpp"
#include "evolution/problem.hpp"

namespace scengen {

struct SearchResult {
  EvolutionConfig config;
  Individual best;                        // highest raw F1 seen
  std::vector<Individual> pareto_front;   // MO only: distinct genomes of the first front
  std::vector<Individual> population;     // final population (empty for RANDOM)
  std::vector<double> history;            // best raw F1 after each generation
  long evaluations_used = 0;
  double wall_time = 0.0;                 // seconds
};

/// Scores a genome: raw F1 from the problem, F2 as Jaccard distance to the
/// parent snapshot (0 without a parent), C1 violation max(0, alpha - F1).
void evaluate(Individual& ind, const Problem& problem, double alpha);

/// Samples an initial-generation genome with the configured initializer.
TestCase initial_test_case(const Problem& problem, InitMode init, Rng& rng);

/// SO/MO genetic search or the random-search baseline. Deterministic in
/// (problem, config). Offspring whose genome already appears in the
/// population or the current batch are dropped unevaluated, up to 20 per
/// offspring slot and generation.
SearchResult run_search(const Problem& problem, const EvolutionConfig& config);

/// Mutually non-dominated, distinct-genome members of the first front. When
/// nothing is feasible the front is the least-violating set.
std::vector<Individual> extract_pareto_front(std::vector<Individual> population);

}  // namespace scengen
