#include "lkas/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "common/error.hpp"

namespace scengen::lkas {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

NelderMeadResult nelder_mead(const Objective& objective, std::vector<double> x0, const NelderMeadOptions& options) {
  NelderMeadResult result;
  auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    const double v = objective(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };

  const double f0 = objective(x0);
  ++result.evaluations;
  if (!std::isfinite(f0)) throw Error(ErrorCode::invalid_argument, "objective is not finite at the starting point");
  const std::size_t n = x0.size();
  if (n == 0 || options.max_iterations <= 0) {
    result.x = std::move(x0);
    result.f = f0;
    result.converged = n == 0;
    return result;
  }

  std::vector<std::vector<double>> simplex(n + 1, x0);
  std::vector<double> values(n + 1, f0);
  for (std::size_t i = 0; i < n; ++i) {
    simplex[i + 1][i] = x0[i] != 0.0 ? x0[i] * (1.0 + options.relative_step) : options.zero_step;
    values[i + 1] = eval(simplex[i + 1]);
  }

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), second(n);
  auto along = [&](double scale, const std::vector<double>& from, std::vector<double>& out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = centroid[i] + scale * (from[i] - centroid[i]);
  };

  for (; result.iterations < options.max_iterations; ++result.iterations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t next_worst = order[n - 1];

    double diameter = 0.0;
    for (std::size_t k = 1; k <= n; ++k) diameter = std::max(diameter, distance(simplex[order[k]], simplex[best]));
    if (diameter < options.tolerance) {
      result.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[order[k]][i];
    for (double& c : centroid) c /= static_cast<double>(n);

    along(-kReflect, simplex[worst], trial);
    const double fr = eval(trial);
    if (fr < values[best]) {
      along(-kReflect * kExpand, simplex[worst], second);
      const double fe = eval(second);
      if (fe < fr) {
        simplex[worst] = second;
        values[worst] = fe;
      } else {
        simplex[worst] = trial;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[next_worst]) {
      simplex[worst] = trial;
      values[worst] = fr;
      continue;
    }
    if (fr < values[worst]) {
      // outside contraction, toward the reflected point
      along(-kReflect * kContract, simplex[worst], second);
      const double fc = eval(second);
      if (fc <= fr) {
        simplex[worst] = second;
        values[worst] = fc;
        continue;
      }
    } else {
      along(kContract, simplex[worst], second);
      const double fc = eval(second);
      if (fc < values[worst]) {
        simplex[worst] = second;
        values[worst] = fc;
        continue;
      }
    }
    for (std::size_t k = 1; k <= n; ++k) {
      auto& v = simplex[order[k]];
      for (std::size_t i = 0; i < n; ++i) v[i] = simplex[best][i] + kShrink * (v[i] - simplex[best][i]);
      values[order[k]] = eval(v);
    }
  }

  const auto best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
  result.x = simplex[best];
  result.f = values[best];
  return result;
}

}  // namespace scengen::lkas
