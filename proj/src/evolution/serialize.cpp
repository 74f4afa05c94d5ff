#include "evolution/serialize.hpp"

#include <algorithm>

#include "scenario/serialize.hpp"

namespace scengen {

nlohmann::json individual_to_json(const ScenarioSchema& schema, const Individual& ind) {
  return {{"f1", ind.raw_f1()},
          {"f2", ind.raw_f2()},
          {"violation", ind.violation},
          {"genome", test_case_to_json(schema, ind.genome)}};
}

Individual individual_from_json(const ScenarioSchema& schema, const nlohmann::json& doc) {
  Individual ind;
  ind.genome = test_case_from_json(schema, doc.at("genome"));
  ind.f1 = negated(doc.at("f1").get<double>());
  ind.f2 = negated(doc.at("f2").get<double>());
  ind.violation = doc.at("violation").get<double>();
  return ind;
}

std::vector<Individual> fittest_distinct(const std::vector<Individual>& population, std::size_t top_k) {
  std::vector<const Individual*> order;
  for (const auto& ind : population) order.push_back(&ind);
  std::stable_sort(order.begin(), order.end(), [](const Individual* a, const Individual* b) {
    if (a->violation != b->violation) return a->violation < b->violation;
    return a->f1 < b->f1;
  });
  std::vector<Individual> out;
  for (const Individual* ind : order) {
    if (out.size() == top_k) break;
    if (std::none_of(out.begin(), out.end(), [&](const Individual& o) { return o.genome == ind->genome; }))
      out.push_back(*ind);
  }
  return out;
}

nlohmann::json search_result_to_json(const ScenarioSchema& schema, const SearchResult& result, std::size_t top_k) {
  nlohmann::json top = nlohmann::json::array();
  for (const auto& ind : fittest_distinct(result.population, top_k)) top.push_back(individual_to_json(schema, ind));
  nlohmann::json front = nlohmann::json::array();
  for (const auto& ind : result.pareto_front) front.push_back(individual_to_json(schema, ind));
  return {{"config", to_json(result.config)},
          {"seed", result.config.seed},
          {"evaluations_used", result.evaluations_used},
          {"history", result.history},
          {"best", individual_to_json(schema, result.best)},
          {"top", std::move(top)},
          {"pareto_front", std::move(front)}};
}

}  // namespace scengen
