#include "evolution/config.hpp"

#include "common/error.hpp"

namespace scengen {

std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::SO: return "SO";
    case SearchMode::MO: return "MO";
    case SearchMode::RANDOM: return "RANDOM";
  }
  return "?";
}

std::string to_string(InitMode mode) { return mode == InitMode::MARKOV ? "MARKOV" : "UNIFORM"; }

SearchMode parse_search_mode(std::string_view text) {
  if (text == "SO" || text == "so") return SearchMode::SO;
  if (text == "MO" || text == "mo") return SearchMode::MO;
  if (text == "RANDOM" || text == "random") return SearchMode::RANDOM;
  throw Error(ErrorCode::invalid_argument, "unknown search mode '" + std::string(text) + "'");
}

InitMode parse_init_mode(std::string_view text) {
  if (text == "UNIFORM" || text == "uniform") return InitMode::UNIFORM;
  if (text == "MARKOV" || text == "markov") return InitMode::MARKOV;
  throw Error(ErrorCode::invalid_argument, "unknown init mode '" + std::string(text) + "'");
}

void EvolutionConfig::validate() const {
  if (population_size < 2) throw Error(ErrorCode::invalid_argument, "population_size must be >= 2");
  if (n_offspring < 1) throw Error(ErrorCode::invalid_argument, "n_offspring must be >= 1");
  if (eval_budget < population_size) throw Error(ErrorCode::invalid_argument, "eval_budget must be >= population_size");
  if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0))
    throw Error(ErrorCode::invalid_argument, "mutation_rate must lie in [0, 1]");
  if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0))
    throw Error(ErrorCode::invalid_argument, "crossover_rate must lie in [0, 1]");
}

nlohmann::json to_json(const EvolutionConfig& c) {
  return {{"mode", to_string(c.mode)},
          {"population_size", c.population_size},
          {"n_offspring", c.n_offspring},
          {"mutation_rate", c.mutation_rate},
          {"crossover_rate", c.crossover_rate},
          {"eval_budget", c.eval_budget},
          {"seed", c.seed},
          {"alpha", c.alpha},
          {"init", to_string(c.init)}};
}

EvolutionConfig apply_overrides(EvolutionConfig c, const nlohmann::json& o) {
  if (o.is_null()) return c;
  if (!o.is_object()) throw Error(ErrorCode::invalid_argument, "config overrides must be an object");
  try {
    if (o.contains("mode")) c.mode = parse_search_mode(o.at("mode").get<std::string>());
    if (o.contains("population_size")) c.population_size = o.at("population_size").get<int>();
    if (o.contains("n_offspring")) c.n_offspring = o.at("n_offspring").get<int>();
    if (o.contains("mutation_rate")) c.mutation_rate = o.at("mutation_rate").get<double>();
    if (o.contains("crossover_rate")) c.crossover_rate = o.at("crossover_rate").get<double>();
    if (o.contains("eval_budget")) c.eval_budget = o.at("eval_budget").get<long>();
    if (o.contains("seed")) c.seed = o.at("seed").get<std::uint64_t>();
    if (o.contains("alpha")) c.alpha = o.at("alpha").get<double>();
    if (o.contains("init")) c.init = parse_init_mode(o.at("init").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::invalid_argument, std::string("bad config value: ") + e.what());
  }
  return c;
}

}  // namespace scengen
