#include "evolution/nsga.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace scengen {

bool constrained_dominates(const Individual& a, const Individual& b) {
  if (a.feasible() != b.feasible()) return a.feasible();
  if (!a.feasible()) return a.violation < b.violation;
  return a.f1 <= b.f1 && a.f2 <= b.f2 && (a.f1 < b.f1 || a.f2 < b.f2);
}

Fronts nondominated_sort(std::span<Individual> pool) {
  const std::size_t n = pool.size();
  std::vector<std::vector<std::size_t>> dominated(n);
  std::vector<std::size_t> domination_count(n, 0);
  Fronts fronts;
  std::vector<std::size_t> current;

  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (constrained_dominates(pool[p], pool[q])) {
        dominated[p].push_back(q);
        ++domination_count[q];
      } else if (constrained_dominates(pool[q], pool[p])) {
        dominated[q].push_back(p);
        ++domination_count[p];
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p)
    if (domination_count[p] == 0) current.push_back(p);

  int rank = 0;
  while (!current.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t p : current) {
      pool[p].rank = rank;
      for (std::size_t q : dominated[p])
        if (--domination_count[q] == 0) next.push_back(q);
    }
    std::sort(next.begin(), next.end());
    assign_crowding(pool, current);
    fronts.push_back(std::move(current));
    current = std::move(next);
    ++rank;
  }
  return fronts;
}

void assign_crowding(std::span<Individual> pool, const std::vector<std::size_t>& front) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  for (std::size_t i : front) pool[i].crowding = 0.0;
  if (front.size() <= 2) {
    for (std::size_t i : front) pool[i].crowding = inf;
    return;
  }
  auto objective = [&](std::size_t i, int m) { return m == 0 ? pool[i].f1 : pool[i].f2; };
  for (int m = 0; m < 2; ++m) {
    std::vector<std::size_t> order = front;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return objective(a, m) < objective(b, m); });
    const double lo = objective(order.front(), m);
    const double hi = objective(order.back(), m);
    pool[order.front()].crowding = inf;
    pool[order.back()].crowding = inf;
    if (hi <= lo) continue;
    for (std::size_t k = 1; k + 1 < order.size(); ++k)
      pool[order[k]].crowding += (objective(order[k + 1], m) - objective(order[k - 1], m)) / (hi - lo);
  }
}

std::vector<Individual> mu_plus_lambda_insert(std::vector<Individual> parents, std::vector<Individual> offspring,
                                              std::size_t population_size, SearchMode mode) {
  std::vector<Individual> pool = std::move(parents);
  pool.insert(pool.end(), std::make_move_iterator(offspring.begin()), std::make_move_iterator(offspring.end()));

  std::vector<Individual> survivors;
  survivors.reserve(std::min(population_size, pool.size()));

  if (mode == SearchMode::MO) {
    Fronts fronts = nondominated_sort(pool);
    for (auto& front : fronts) {
      if (survivors.size() + front.size() > population_size) {
        std::stable_sort(front.begin(), front.end(),
                         [&](std::size_t a, std::size_t b) { return pool[a].crowding > pool[b].crowding; });
        front.resize(population_size - survivors.size());
      }
      for (std::size_t i : front) survivors.push_back(std::move(pool[i]));
      if (survivors.size() == population_size) break;
    }
    // crowding among the survivors drives the next tournament
    nondominated_sort(survivors);
    return survivors;
  }

  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (pool[a].violation != pool[b].violation) return pool[a].violation < pool[b].violation;
    return pool[a].f1 < pool[b].f1;
  });
  order.resize(std::min(order.size(), population_size));
  for (std::size_t i = 0; i < order.size(); ++i) {
    survivors.push_back(std::move(pool[order[i]]));
    survivors.back().rank = static_cast<int>(i);
  }
  return survivors;
}

}  // namespace scengen
