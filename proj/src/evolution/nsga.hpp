#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "evolution/config.hpp"
#include "evolution/individual.hpp"

namespace scengen {

/// Feasible beats infeasible, lower violation beats higher among infeasible,
/// Pareto dominance on (f1, f2) among feasible.
bool constrained_dominates(const Individual& a, const Individual& b);

using Fronts = std::vector<std::vector<std::size_t>>;

/// Fast non-dominated sorting under constrained domination. Writes `rank`
/// and per-front `crowding` into the pool and returns index fronts, best
/// first.
Fronts nondominated_sort(std::span<Individual> pool);

/// Crowding distance on (f1, f2) within one front; boundary points get +inf.
void assign_crowding(std::span<Individual> pool, const std::vector<std::size_t>& front);

/// Merges parents and offspring and keeps the best `population_size`.
/// MO: fronts, then crowding on the split front. SO: (violation, f1) order,
/// stable so that parents win ties.
std::vector<Individual> mu_plus_lambda_insert(std::vector<Individual> parents, std::vector<Individual> offspring,
                                              std::size_t population_size, SearchMode mode);

}  // namespace scengen
