#pragma once

#include <functional>
#include <span>
#include <vector>

namespace scengen::lkas {

struct NelderMeadOptions {
  double tolerance = 1e-8;     // stop once every vertex is this close to the best one
  int max_iterations = 1000;
  double relative_step = 0.05; // initial simplex edge, relative to |x0_i|
  double zero_step = 0.00025;  // edge used where x0_i == 0
};

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Downhill simplex with reflection 1, expansion 2, contraction 0.5 and
/// shrink 0.5. Non-finite objective values away from x0 count as +inf.
/// Throws Error(invalid_argument) when the objective is not finite at x0.
NelderMeadResult nelder_mead(const Objective& objective, std::vector<double> x0,
                             const NelderMeadOptions& options = {});

}  // namespace scengen::lkas
