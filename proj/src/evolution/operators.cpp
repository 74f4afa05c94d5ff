#include "evolution/operators.hpp"

#include <algorithm>

#include "common/error.hpp"
#include "evolution/nsga.hpp"

namespace scengen {

namespace {

std::pair<std::size_t, std::size_t> two_distinct(Rng& rng, std::size_t n) {
  std::size_t i = uniform_index(rng, n);
  std::size_t j = uniform_index(rng, n - 1);
  if (j >= i) ++j;
  return {i, j};
}

}  // namespace

const Individual& tournament_select(std::span<const Individual> population, SearchMode mode, Rng& rng) {
  if (population.size() == 1) return population.front();
  auto [i, j] = two_distinct(rng, population.size());
  const Individual& a = population[i];
  const Individual& b = population[j];

  if (a.feasible() != b.feasible()) return a.feasible() ? a : b;
  if (!a.feasible() && a.violation != b.violation) return a.violation < b.violation ? a : b;

  if (mode == SearchMode::MO) {
    if (constrained_dominates(a, b)) return a;
    if (constrained_dominates(b, a)) return b;
    if (a.crowding != b.crowding) return a.crowding > b.crowding ? a : b;
  } else if (a.f1 != b.f1) {
    return a.f1 < b.f1 ? a : b;
  }
  return bernoulli(rng, 0.5) ? a : b;
}

std::pair<TestCase, TestCase> one_point_crossover_at(const TestCase& p1, const TestCase& p2, std::size_t cut) {
  const std::size_t shorter = std::min(p1.size(), p2.size());
  if (shorter < 2) throw Error(ErrorCode::invalid_argument, "crossover needs parents with at least 2 elements");
  if (cut < 1 || cut >= shorter) throw Error(ErrorCode::invalid_argument, "crossover point out of range");

  TestCase c1, c2;
  c1.elements.reserve(p2.size());
  c2.elements.reserve(p1.size());
  c1.elements.insert(c1.elements.end(), p1.elements.begin(), p1.elements.begin() + static_cast<long>(cut));
  c1.elements.insert(c1.elements.end(), p2.elements.begin() + static_cast<long>(cut), p2.elements.end());
  c2.elements.insert(c2.elements.end(), p2.elements.begin(), p2.elements.begin() + static_cast<long>(cut));
  c2.elements.insert(c2.elements.end(), p1.elements.begin() + static_cast<long>(cut), p1.elements.end());
  return {std::move(c1), std::move(c2)};
}

std::pair<TestCase, TestCase> one_point_crossover(const TestCase& p1, const TestCase& p2, Rng& rng) {
  const std::size_t shorter = std::min(p1.size(), p2.size());
  if (shorter < 2) throw Error(ErrorCode::invalid_argument, "crossover needs parents with at least 2 elements");
  const auto cut = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(shorter) - 1));
  return one_point_crossover_at(p1, p2, cut);
}

TestCase mutate_exchange_at(const TestCase& tc, std::size_t i, std::size_t j) {
  TestCase out = tc;
  std::swap(out.elements.at(i), out.elements.at(j));
  return out;
}

TestCase mutate_exchange(const TestCase& tc, Rng& rng) {
  if (tc.size() < 2) return tc;
  auto [i, j] = two_distinct(rng, tc.size());
  return mutate_exchange_at(tc, i, j);
}

TestCase mutate_change_variable(const TestCase& tc, const ScenarioSchema& schema, Rng& rng) {
  if (tc.empty()) return tc;
  TestCase out = tc;
  Element& e = out.elements[uniform_index(rng, out.size())];

  std::vector<std::size_t> present;
  for (std::size_t i = 0; i < e.values.size(); ++i)
    if (e.values[i]) present.push_back(i);
  if (present.empty()) return out;

  const std::size_t attr = present[uniform_index(rng, present.size())];
  e.values[attr] = schema.attribute(attr).sample(rng);
  schema.conform(e, rng);
  return out;
}

TestCase mutate_scramble(const TestCase& tc, Rng& rng) {
  if (tc.size() < 2) return tc;
  TestCase out = tc;
  const long n = static_cast<long>(tc.size());
  const long width = uniform_int(rng, 2, n);
  const long start = uniform_int(rng, 0, n - width);
  auto first = out.elements.begin() + start;
  // Fisher-Yates so the draw sequence does not depend on the standard library
  for (long k = width - 1; k > 0; --k) std::swap(first[k], first[uniform_int(rng, 0, k)]);
  return out;
}

void clip_to_schema(TestCase& tc, const ScenarioSchema& schema) {
  if (tc.size() > schema.max_elements()) tc.elements.resize(schema.max_elements());
}

}  // namespace scengen
