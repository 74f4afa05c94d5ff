#include <algorithm>
#include <cmath>
#include <numeric>

#include "common/error.hpp"
#include "harness/harness.hpp"
#include "scenario/jaccard.hpp"

namespace scengen::harness {

namespace {

constexpr std::size_t kExactLimit = 8;

void require_samples(std::span<const double> xs, std::span<const double> ys) {
  if (xs.empty() || ys.empty()) throw Error(ErrorCode::invalid_argument, "statistics need non-empty samples");
}

// Midranks (1-based) of the pooled sample.
std::vector<double> midranks(const std::vector<double>& pooled) {
  std::vector<std::size_t> order(pooled.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pooled[a] < pooled[b]; });
  std::vector<double> ranks(pooled.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && pooled[order[j + 1]] == pooled[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

// Two-tailed exact p: share of rank assignments whose U is at least as far
// from n m / 2 as the observed one.
double exact_p(const std::vector<double>& ranks, std::size_t n, double u_observed) {
  const std::size_t total = ranks.size();
  const double m = static_cast<double>(total - n);
  const double centre = static_cast<double>(n) * m / 2.0;
  const double observed = std::abs(u_observed - centre);
  const double offset = static_cast<double>(n) * (static_cast<double>(n) + 1.0) / 2.0;

  std::vector<std::size_t> pick(n);
  std::iota(pick.begin(), pick.end(), 0);
  long extreme = 0, count = 0;
  while (true) {
    double rank_sum = 0.0;
    for (std::size_t i : pick) rank_sum += ranks[i];
    if (std::abs(rank_sum - offset - centre) >= observed - 1e-9) ++extreme;
    ++count;
    // next n-combination of [0, total)
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == total - n + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return static_cast<double>(extreme) / static_cast<double>(count);
}

}  // namespace

MannWhitneyResult mann_whitney_u(std::span<const double> xs, std::span<const double> ys) {
  require_samples(xs, ys);
  const std::size_t n = xs.size();
  const std::size_t m = ys.size();
  std::vector<double> pooled(xs.begin(), xs.end());
  pooled.insert(pooled.end(), ys.begin(), ys.end());
  const std::vector<double> ranks = midranks(pooled);

  double rank_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) rank_sum += ranks[i];
  MannWhitneyResult r;
  r.u = rank_sum - static_cast<double>(n) * (static_cast<double>(n) + 1.0) / 2.0;

  if (n <= kExactLimit && m <= kExactLimit) {
    r.exact = true;
    r.p_value = std::clamp(exact_p(ranks, n, r.u), 0.0, 1.0);
    return r;
  }

  const double big_n = static_cast<double>(n + m);
  double ties = 0.0;
  std::vector<double> sorted = pooled;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    ties += t * t * t - t;
    i = j;
  }
  const double nm = static_cast<double>(n) * static_cast<double>(m);
  const double variance = nm / 12.0 * ((big_n + 1.0) - ties / (big_n * (big_n - 1.0)));
  if (!(variance > 0.0)) {
    r.p_value = 1.0;
    return r;
  }
  const double z = std::max(0.0, std::abs(r.u - nm / 2.0) - 0.5) / std::sqrt(variance);
  r.p_value = std::clamp(std::erfc(z / std::sqrt(2.0)), 0.0, 1.0);
  return r;
}

double cliffs_delta(std::span<const double> xs, std::span<const double> ys) {
  require_samples(xs, ys);
  long greater = 0, less = 0;
  for (double x : xs)
    for (double y : ys) {
      if (x > y) ++greater;
      if (x < y) ++less;
    }
  return static_cast<double>(greater - less) / (static_cast<double>(xs.size()) * static_cast<double>(ys.size()));
}

std::string magnitude(double delta) {
  const double a = std::abs(delta);
  if (a < 0.147) return "negligible";
  if (a < 0.33) return "small";
  if (a < 0.474) return "medium";
  return "large";
}

int magnitude_rank(std::string_view label) {
  if (label == "negligible") return 0;
  if (label == "small") return 1;
  if (label == "medium") return 2;
  if (label == "large") return 3;
  throw Error(ErrorCode::invalid_argument, "unknown magnitude label '" + std::string(label) + "'");
}

double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double median(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  std::vector<double> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 == 1 ? v[h] : (v[h - 1] + v[h]) / 2.0;
}

double mean_pairwise_jaccard(const ScenarioSchema& schema, const std::vector<TestCase>& cases) {
  if (cases.size() < 2) return 0.0;
  double total = 0.0;
  long pairs = 0;
  for (std::size_t i = 0; i < cases.size(); ++i)
    for (std::size_t j = i + 1; j < cases.size(); ++j) {
      total += jaccard_distance(schema, cases[i], cases[j]);
      ++pairs;
    }
  return total / static_cast<double>(pairs);
}

}  // namespace scengen::harness
