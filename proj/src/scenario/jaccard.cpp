#include "scenario/jaccard.hpp"

#include <algorithm>
#include <map>

namespace scengen {

namespace {

std::map<Element, std::size_t> count_elements(const ScenarioSchema& schema, const TestCase& tc) {
  std::map<Element, std::size_t> counts;
  for (const auto& e : tc.elements) ++counts[schema.canonical(e)];
  return counts;
}

}  // namespace

double jaccard_distance(const ScenarioSchema& schema, const TestCase& a, const TestCase& b) {
  schema.check_arity(a);
  schema.check_arity(b);
  auto ca = count_elements(schema, a);
  auto cb = count_elements(schema, b);

  std::size_t intersection = 0;
  std::size_t union_size = 0;
  for (const auto& [element, n] : ca) {
    auto it = cb.find(element);
    std::size_t m = it == cb.end() ? 0 : it->second;
    intersection += std::min(n, m);
    union_size += std::max(n, m);
  }
  for (const auto& [element, m] : cb)
    if (!ca.contains(element)) union_size += m;

  if (union_size == 0) return 0.0;
  return 1.0 - static_cast<double>(intersection) / static_cast<double>(union_size);
}

}  // namespace scengen
