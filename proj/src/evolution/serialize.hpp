#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "evolution/search.hpp"

namespace scengen {

/// Raw (un-negated) objective values plus the genome document.
nlohmann::json individual_to_json(const ScenarioSchema& schema, const Individual& ind);
Individual individual_from_json(const ScenarioSchema& schema, const nlohmann::json& doc);

/// The `top_k` fittest distinct genomes of a population, best first.
std::vector<Individual> fittest_distinct(const std::vector<Individual>& population, std::size_t top_k);

/// Config echo, history, evaluation count, best, top individuals and (MO)
/// Pareto front. Wall time is left out so documents are reproducible.
nlohmann::json search_result_to_json(const ScenarioSchema& schema, const SearchResult& result,
                                     std::size_t top_k = 10);

}  // namespace scengen
