#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

namespace scengen {

enum class SearchMode { SO, MO, RANDOM };
enum class InitMode { UNIFORM, MARKOV };

std::string to_string(SearchMode mode);
std::string to_string(InitMode mode);
SearchMode parse_search_mode(std::string_view text);
InitMode parse_init_mode(std::string_view text);

struct EvolutionConfig {
  SearchMode mode = SearchMode::SO;
  int population_size = 100;
  int n_offspring = 100;
  double mutation_rate = 0.4;
  double crossover_rate = 1.0;
  long eval_budget = 10000;
  std::uint64_t seed = 1;
  double alpha = 0.0;  // C1 feasibility threshold on raw fitness
  InitMode init = InitMode::UNIFORM;

  void validate() const;
};

nlohmann::json to_json(const EvolutionConfig& config);
/// Fields present in `overrides` replace the ones in `base`.
EvolutionConfig apply_overrides(EvolutionConfig base, const nlohmann::json& overrides);

}  // namespace scengen
