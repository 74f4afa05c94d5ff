#include <algorithm>
#include <cmath>

#include "common/error.hpp"
#include "lkas/nelder_mead.hpp"
#include "thermostat/thermostat.hpp"

namespace scengen::thermostat {

namespace {

// Dynamics smaller than this over the sampled window are not identifiable.
constexpr double kMinAmplitude = 1e-3;
constexpr double kTolerance = 1e-11;

double branch(Heater h, double k1, double k2, double t0, double t) {
  ModelCoefficients c{k1, k2, k1, k2};
  return h == Heater::on ? on_response(c, t0, t) : off_response(c, t0, t);
}

}  // namespace

FitResult fit_coefficients(std::span<const Sample> samples, Heater heater, const ModelCoefficients& guess,
                           int max_iterations) {
  if (samples.size() < 4) throw Error(ErrorCode::invalid_argument, "need at least 4 samples to fit a branch");
  if (!guess.positive()) throw Error(ErrorCode::invalid_argument, "initial coefficients must be positive");

  const auto first = std::min_element(samples.begin(), samples.end(),
                                      [](const Sample& a, const Sample& b) { return a.t < b.t; });
  double t_max = 0.0;
  for (const auto& s : samples) t_max = std::max(t_max, s.t);

  // k1 and k2 are optimized in log space so they stay positive
  auto sse = [&](std::span<const double> p) {
    const double k1 = std::exp(p[0]);
    const double k2 = std::exp(p[1]);
    double sum = 0.0;
    for (const auto& s : samples) {
      const double r = branch(heater, k1, k2, p[2], s.t) - s.temperature;
      sum += r * r;
    }
    return sum;
  };

  const bool on = heater == Heater::on;
  std::vector<double> x0{std::log(on ? guess.k_on1 : guess.k_off1), std::log(on ? guess.k_on2 : guess.k_off2),
                         first->temperature};
  lkas::NelderMeadOptions options;
  options.tolerance = kTolerance;
  options.max_iterations = max_iterations;

  lkas::NelderMeadResult nm = lkas::nelder_mead(sse, x0, options);
  int iterations = nm.iterations;
  if (nm.converged && iterations < max_iterations) {
    // a restart from the optimum shakes off a collapsed simplex
    options.max_iterations = max_iterations - iterations;
    nm = lkas::nelder_mead(sse, nm.x, options);
    iterations += nm.iterations;
  }

  const double k1 = std::exp(nm.x[0]);
  const double k2 = std::exp(nm.x[1]);
  if (k1 * (1.0 - std::exp(-k2 * t_max)) < kMinAmplitude)
    throw Error(ErrorCode::degenerate_fit, "samples show no temperature dynamics to fit");
  if (!nm.converged) throw Error(ErrorCode::not_converged, "coefficient fit did not converge within the iteration cap");

  FitResult out;
  out.coefficients = guess;
  if (on) {
    out.coefficients.k_on1 = k1;
    out.coefficients.k_on2 = k2;
  } else {
    out.coefficients.k_off1 = k1;
    out.coefficients.k_off2 = k2;
  }
  out.start_temperature = nm.x[2];
  out.rmse = std::sqrt(nm.f / static_cast<double>(samples.size()));
  out.iterations = iterations;
  return out;
}

}  // namespace scengen::thermostat
