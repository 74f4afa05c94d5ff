#include <algorithm>
#include <cmath>
#include <limits>

#include "common/error.hpp"
#include "lkas/lkas.hpp"

namespace scengen::lkas {

namespace {

CarParams with_vector(CarParams base, std::span<const double> x) {
  base.v0 = x[0];
  base.k = x[1];
  base.alpha = x[2];
  base.beta = x[3];
  return base;
}

}  // namespace

double mean_hausdorff(const std::vector<CalibrationSample>& dataset, const CarParams& params) {
  if (dataset.empty()) throw Error(ErrorCode::invalid_argument, "calibration dataset is empty");
  double total = 0.0;
  for (const auto& sample : dataset)
    total += hausdorff(simulate_car(sample.centerline, params).positions(), sample.reference);
  return total / static_cast<double>(dataset.size());
}

CalibrationResult calibrate(const std::vector<CalibrationSample>& dataset, const CarParams& x0,
                            const NelderMeadOptions& options) {
  x0.validate();
  if (dataset.empty()) throw Error(ErrorCode::invalid_argument, "calibration dataset is empty");
  for (const auto& sample : dataset) {
    const RoadCheck check = validate_road(sample.centerline);
    if (!check.valid()) throw Error(ErrorCode::domain_violation, "calibration road invalid: " + check.reason);
    if (sample.reference.empty()) throw Error(ErrorCode::invalid_argument, "empty reference trajectory");
  }

  // Parameters leaving the positive orthant are rejected as +inf.
  const Objective objective = [&](std::span<const double> x) {
    if (std::any_of(x.begin(), x.end(), [](double v) { return !(v > 0.0); }))
      return std::numeric_limits<double>::infinity();
    return mean_hausdorff(dataset, with_vector(x0, x));
  };

  CalibrationResult result;
  const std::vector<double> start{x0.v0, x0.k, x0.alpha, x0.beta};
  result.initial_distance = objective(start);
  const NelderMeadResult nm = nelder_mead(objective, start, options);
  result.params = with_vector(x0, nm.x);
  result.mean_distance = nm.f;
  result.iterations = nm.iterations;
  result.converged = nm.converged;
  return result;
}

void synthesize_dataset(const std::filesystem::path& dir, int count, std::uint64_t seed, const CarParams& params) {
  if (count < 1) throw Error(ErrorCode::invalid_argument, "dataset needs at least one road");
  params.validate();
  std::filesystem::create_directories(dir);
  const ScenarioSchema schema = make_schema();
  const MarkovChain chain = default_markov_chain();
  Rng rng(seed);
  for (int made = 0, attempts = 0; made < count; ++attempts) {
    if (attempts > 1000 * count) throw Error(ErrorCode::not_converged, "could not sample enough valid roads");
    const Polyline dense = interpolate(decode_road(markov_test_case(schema, chain, rng)));
    if (!validate_road(dense).valid()) continue;
    const std::string stem = "road_" + std::to_string(made);
    write_road_json(dense, dir / (stem + "_road.json"));
    write_trajectory_csv(simulate_car(dense, params), dir / (stem + "_trajectory.csv"));
    ++made;
  }
}

nlohmann::json to_json(const CarParams& p) {
  return {{"v0", p.v0}, {"k", p.k}, {"alpha", p.alpha}, {"beta", p.beta}, {"e", p.e}, {"dt", p.dt}};
}

CarParams car_params_from_json(const nlohmann::json& doc, CarParams base) {
  if (!doc.is_object()) throw Error(ErrorCode::invalid_argument, "car parameters must be a JSON object");
  try {
    for (const auto& [key, value] : doc.items()) {
      const double v = value.get<double>();
      if (key == "v0") base.v0 = v;
      else if (key == "k") base.k = v;
      else if (key == "alpha") base.alpha = v;
      else if (key == "beta") base.beta = v;
      else if (key == "e") base.e = v;
      else if (key == "dt") base.dt = v;
      else throw Error(ErrorCode::invalid_argument, "unknown car parameter '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::invalid_argument, std::string("bad car parameters: ") + e.what());
  }
  base.validate();
  return base;
}

std::vector<CalibrationSample> load_calibration_dataset(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw Error(ErrorCode::io, dir.string() + " is not a directory");
  const std::string suffix = "_road.json";
  std::vector<std::filesystem::path> roads;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.size() > suffix.size() && name.ends_with(suffix)) roads.push_back(entry.path());
  }
  std::sort(roads.begin(), roads.end());

  std::vector<CalibrationSample> out;
  for (const auto& road : roads) {
    const std::string stem = road.filename().string();
    const auto trajectory = dir / (stem.substr(0, stem.size() - suffix.size()) + "_trajectory.csv");
    if (!std::filesystem::exists(trajectory)) continue;
    out.push_back({read_road_json(road), read_trajectory_csv(trajectory)});
  }
  if (out.empty()) throw Error(ErrorCode::io, "no road/trajectory pairs in " + dir.string());
  return out;
}

}  // namespace scengen::lkas
