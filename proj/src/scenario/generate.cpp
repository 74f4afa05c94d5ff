#include "scenario/generate.hpp"

#include <cmath>
#include <numeric>

#include "common/error.hpp"

namespace scengen {

namespace {

constexpr double kProbabilityTolerance = 1e-9;

void check_distribution(const std::vector<double>& p, const char* what) {
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0)) throw Error(ErrorCode::invalid_argument, std::string("negative probability in ") + what);
    sum += v;
  }
  if (std::abs(sum - 1.0) > kProbabilityTolerance)
    throw Error(ErrorCode::invalid_argument, std::string(what) + " does not sum to 1");
}

std::size_t draw(const std::vector<double>& p, Rng& rng) {
  double u = uniform_unit(rng);
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    if (u < acc) return i;
  }
  // u landed in the rounding slack above the last cumulative sum
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] > 0.0) return i;
  return p.size() - 1;
}

std::size_t draw_length(const ScenarioSchema& schema, Rng& rng) {
  return static_cast<std::size_t>(
      uniform_int(rng, static_cast<long>(schema.min_elements()), static_cast<long>(schema.max_elements())));
}

}  // namespace

void MarkovChain::validate() const {
  if (states.empty()) throw Error(ErrorCode::invalid_argument, "Markov chain has no states");
  if (initial.size() != states.size() || transition.size() != states.size())
    throw Error(ErrorCode::invalid_argument, "Markov chain shape mismatch");
  check_distribution(initial, "initial distribution");
  for (const auto& row : transition) {
    if (row.size() != states.size()) throw Error(ErrorCode::invalid_argument, "Markov chain row size mismatch");
    check_distribution(row, "transition row");
  }
}

TestCase random_test_case(const ScenarioSchema& schema, Rng& rng) {
  TestCase tc;
  tc.elements.resize(draw_length(schema, rng));
  for (auto& e : tc.elements) schema.conform(e, rng);
  return tc;
}

TestCase markov_test_case(const ScenarioSchema& schema, const MarkovChain& chain, Rng& rng) {
  chain.validate();
  if (chain.attribute >= schema.arity())
    throw Error(ErrorCode::invalid_argument, "Markov chain attribute index out of range");
  const auto& spec = schema.attribute(chain.attribute);
  for (double s : chain.states)
    if (!spec.contains(s))
      throw Error(ErrorCode::domain_violation, "Markov chain state outside the domain of " + spec.name());

  TestCase tc;
  tc.elements.resize(draw_length(schema, rng));
  std::size_t state = draw(chain.initial, rng);
  for (auto& e : tc.elements) {
    e.values.assign(schema.arity(), std::nullopt);
    e.values[chain.attribute] = chain.states[state];
    schema.conform(e, rng);
    state = draw(chain.transition[state], rng);
  }
  return tc;
}

}  // namespace scengen
