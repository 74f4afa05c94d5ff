#include "evolution/search.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "common/error.hpp"
#include "evolution/nsga.hpp"
#include "evolution/operators.hpp"
#include "scenario/jaccard.hpp"

namespace scengen {

namespace {

constexpr long kDuplicateRetries = 20;

double best_raw(const std::vector<Individual>& pop) {
  double best = 0.0;
  for (const auto& ind : pop) best = std::max(best, ind.raw_f1());
  return best;
}

const Individual& best_of(const std::vector<Individual>& pop) {
  return *std::max_element(pop.begin(), pop.end(),
                           [](const Individual& a, const Individual& b) { return a.raw_f1() < b.raw_f1(); });
}

TestCase mutate(const TestCase& tc, const ScenarioSchema& schema, Rng& rng) {
  switch (uniform_index(rng, 3)) {
    case 0: return mutate_exchange(tc, rng);
    case 1: return mutate_change_variable(tc, schema, rng);
    default: return mutate_scramble(tc, rng);
  }
}

SearchResult random_search(const Problem& problem, const EvolutionConfig& config, Rng& rng) {
  SearchResult result;
  bool have_best = false;
  for (long e = 0; e < config.eval_budget; ++e) {
    Individual ind;
    ind.genome = initial_test_case(problem, config.init, rng);
    evaluate(ind, problem, config.alpha);
    ++result.evaluations_used;
    if (!have_best || ind.raw_f1() > result.best.raw_f1()) {
      result.best = std::move(ind);
      have_best = true;
    }
    // one history point per population-sized batch, matching the GA's cadence
    if ((e + 1) % config.population_size == 0 || e + 1 == config.eval_budget)
      result.history.push_back(result.best.raw_f1());
  }
  return result;
}

SearchResult genetic_search(const Problem& problem, const EvolutionConfig& config, Rng& rng) {
  const auto& schema = problem.schema();
  SearchResult result;
  std::vector<Individual> population;
  population.reserve(static_cast<std::size_t>(config.population_size));
  for (int i = 0; i < config.population_size; ++i) {
    Individual ind;
    ind.genome = initial_test_case(problem, config.init, rng);
    evaluate(ind, problem, config.alpha);
    population.push_back(std::move(ind));
  }
  result.evaluations_used = config.population_size;
  population = mu_plus_lambda_insert(std::move(population), {}, static_cast<std::size_t>(config.population_size),
                                     config.mode);
  result.history.push_back(best_raw(population));

  // Offspring that repeat a genome already in the population or the batch are
  // dropped before evaluation; after too many rejections they are let through.
  std::set<std::vector<Element>> seen;
  while (result.evaluations_used < config.eval_budget) {
    const long quota = std::min<long>(config.n_offspring, config.eval_budget - result.evaluations_used);
    seen.clear();
    for (const auto& ind : population) seen.insert(ind.genome.elements);
    long rejections_left = kDuplicateRetries * quota;

    std::vector<Individual> offspring;
    offspring.reserve(static_cast<std::size_t>(quota));
    while (static_cast<long>(offspring.size()) < quota) {
      const Individual& a = tournament_select(population, config.mode, rng);
      const Individual& b = tournament_select(population, config.mode, rng);
      TestCase c1 = a.genome;
      TestCase c2 = b.genome;
      if (std::min(a.genome.size(), b.genome.size()) >= 2 && bernoulli(rng, config.crossover_rate)) {
        std::tie(c1, c2) = one_point_crossover(a.genome, b.genome, rng);
        clip_to_schema(c1, schema);
        clip_to_schema(c2, schema);
      }
      for (auto* child : {&c1, &c2}) {
        if (static_cast<long>(offspring.size()) >= quota) break;
        Individual ind;
        ind.parent = child == &c1 ? a.genome : b.genome;
        ind.genome = bernoulli(rng, config.mutation_rate) ? mutate(*child, schema, rng) : std::move(*child);
        if (!seen.insert(ind.genome.elements).second && rejections_left-- > 0) continue;
        evaluate(ind, problem, config.alpha);
        offspring.push_back(std::move(ind));
      }
    }
    result.evaluations_used += static_cast<long>(offspring.size());
    population = mu_plus_lambda_insert(std::move(population), std::move(offspring),
                                       static_cast<std::size_t>(config.population_size), config.mode);
    result.history.push_back(best_raw(population));
  }

  result.best = best_of(population);
  if (config.mode == SearchMode::MO) result.pareto_front = extract_pareto_front(population);
  result.population = std::move(population);
  return result;
}

}  // namespace

void evaluate(Individual& ind, const Problem& problem, double alpha) {
  const double phi = problem.fitness(ind.genome);
  ind.f1 = negated(phi);
  ind.f2 = ind.parent ? negated(jaccard_distance(problem.schema(), ind.genome, *ind.parent)) : 0.0;
  ind.violation = std::max(0.0, alpha - phi);
}

TestCase initial_test_case(const Problem& problem, InitMode init, Rng& rng) {
  if (init == InitMode::MARKOV) {
    const MarkovChain* chain = problem.markov_chain();
    if (chain == nullptr) throw Error(ErrorCode::invalid_argument, problem.name() + " has no Markov initializer");
    return markov_test_case(problem.schema(), *chain, rng);
  }
  return random_test_case(problem.schema(), rng);
}

SearchResult run_search(const Problem& problem, const EvolutionConfig& config) {
  config.validate();
  const auto& schema = problem.schema();
  if (schema.min_elements() < 1 || schema.arity() == 0)
    throw Error(ErrorCode::schema_mismatch, problem.name() + ": unusable schema");

  const auto start = std::chrono::steady_clock::now();
  Rng rng(config.seed);
  SearchResult result =
      config.mode == SearchMode::RANDOM ? random_search(problem, config, rng) : genetic_search(problem, config, rng);
  result.config = config;
  result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<Individual> extract_pareto_front(std::vector<Individual> population) {
  if (population.empty()) return {};
  Fronts fronts = nondominated_sort(population);
  std::vector<Individual> front;
  for (std::size_t i : fronts.front()) {
    const bool duplicate = std::any_of(front.begin(), front.end(),
                                       [&](const Individual& f) { return f.genome == population[i].genome; });
    if (!duplicate) front.push_back(population[i]);
  }
  return front;
}

}  // namespace scengen
