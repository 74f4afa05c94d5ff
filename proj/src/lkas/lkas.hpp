#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "evolution/problem.hpp"
#include "lkas/geometry.hpp"
#include "lkas/nelder_mead.hpp"
#include "scenario/generate.hpp"
#include "scenario/schema.hpp"

namespace scengen::lkas {

inline constexpr double kMapSize = 200.0;     // m
inline constexpr double kMapMargin = 5.0;     // m kept free along every border
inline constexpr double kLaneWidth = 4.0;     // m
inline constexpr double kTurnRadius = 15.0;   // m
inline constexpr double kStraightStep = 2.0;  // m between skeleton points on straights
inline constexpr double kArcStepDeg = 5.0;    // degrees between skeleton points on arcs
inline constexpr double kMinRadius = 7.0;     // m, tighter dense curvature is "too sharp"
inline constexpr double kAlpha = 2.0;         // C1 threshold on max deviation, m
inline constexpr double kFailureDeviation = 2.2;  // deviation that would leave the lane

inline constexpr Vec2 kStartPoint{100.0, 10.0};

// Attribute order in the road schema.
inline constexpr std::size_t kType = 0;    // straight | turn_left | turn_right
inline constexpr std::size_t kLength = 1;  // straight length, m
inline constexpr std::size_t kAngle = 2;   // turn angle, degrees

inline constexpr double kStraight = 0.0;
inline constexpr double kTurnLeft = 1.0;
inline constexpr double kTurnRight = 2.0;

ScenarioSchema make_schema();
/// Chain over segment types used by the Markov initializer.
MarkovChain default_markov_chain();

/// Skeleton polyline: from (100, 10) heading +y, straights emit a point every
/// 2 m (plus their exact end), turns follow a 15 m arc with a point every 5
/// degrees; left turns are counterclockwise. Throws on an empty test case.
Polyline decode_road(const TestCase& tc);

/// Centripetal Catmull-Rom through every skeleton point, each span resampled
/// at equal arc-length steps no longer than `spacing`. Skeleton points appear
/// verbatim in the output.
Polyline interpolate(const Polyline& skeleton, double spacing = 1.0);

enum class RoadDefect { none, out_of_bounds, self_intersecting, too_sharp };

struct RoadCheck {
  RoadDefect defect = RoadDefect::none;
  std::string reason;

  bool valid() const { return defect == RoadDefect::none; }
};

std::string to_string(RoadDefect defect);

/// Rules in order: every point within [5, 195]^2, no crossing between
/// non-adjacent segments, circumradius of every three consecutive points at
/// least 7 m.
RoadCheck validate_road(const Polyline& dense);

/// Smallest circumradius over consecutive point triples (infinity when the
/// polyline is straight or too short).
double min_turning_radius(const Polyline& dense);

struct CarParams {
  double v0 = 7.0;     // initial speed, m/s
  double k = 3.5;      // steering gain
  double alpha = 0.3;  // deceleration outside the deadband, m/s^2
  double beta = 0.1;   // acceleration inside the deadband, m/s^2
  double e = 0.1;      // deadband half-width, m
  double dt = 0.1;     // s

  /// Throws Error(invalid_argument) unless every field is positive and finite.
  void validate() const;
};

struct CarState {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;  // rad, counterclockwise from +x
  double v = 0.0;
  double d = 0.0;      // signed deviation, positive left of the road direction
};

struct CarTrajectory {
  std::vector<CarState> states;
  double max_deviation = 0.0;

  Polyline positions() const;
};

/// Euler integration of the kinematic car under bang-bang Stanley steering:
/// the heading turns toward the centerline at atan(k / v) while |d| > e and
/// is held otherwise; speed drops by alpha outside the deadband and grows by
/// beta inside, never below 1 m/s. The car starts on the first point (shifted
/// sideways by `lateral_offset`, positive left) aligned with the first
/// segment and stops within 2 m of the last point, once the closest road
/// point is the last point, or after three times the nominal number of steps.
CarTrajectory simulate_car(const Polyline& dense, const CarParams& params, double lateral_offset = 0.0);

/// Decode, interpolate, validate; 0 for invalid roads, otherwise the car's
/// maximum deviation.
double fitness_f1(const TestCase& tc, const CarParams& params = {});

/// Symmetric Hausdorff distance between two point sets.
double hausdorff(const Polyline& a, const Polyline& b);

struct CalibrationSample {
  Polyline centerline;  // dense road
  Polyline reference;   // observed car positions
};

struct CalibrationResult {
  CarParams params;
  double mean_distance = 0.0;  // at `params`
  double initial_distance = 0.0;  // at the starting guess
  int iterations = 0;
  bool converged = false;
};

double mean_hausdorff(const std::vector<CalibrationSample>& dataset, const CarParams& params);

/// Nelder-Mead over (v0, k, alpha, beta) minimizing the mean Hausdorff
/// distance between simulated and reference trajectories.
CalibrationResult calibrate(const std::vector<CalibrationSample>& dataset, const CarParams& x0,
                            const NelderMeadOptions& options = {});

/// Drives `count` random valid roads with `params` and writes them as
/// road_<i>_road.json / road_<i>_trajectory.csv pairs.
void synthesize_dataset(const std::filesystem::path& dir, int count, std::uint64_t seed, const CarParams& params);

/// Reads every `<name>_road.json` with a matching `<name>_trajectory.csv`.
std::vector<CalibrationSample> load_calibration_dataset(const std::filesystem::path& dir);

nlohmann::json to_json(const CarParams& params);
/// Fields present in `doc` replace those of `base`.
CarParams car_params_from_json(const nlohmann::json& doc, CarParams base = {});

/// {"map_size": 200, "lane_width": 4, "points": [[x, y], ...]}
void write_road_json(const Polyline& dense, const std::filesystem::path& path);
Polyline read_road_json(const std::filesystem::path& path);
/// Columns t,x,y,theta,v,d.
void write_trajectory_csv(const CarTrajectory& trajectory, const std::filesystem::path& path);
/// Positions from a trajectory CSV (the x and y columns).
Polyline read_trajectory_csv(const std::filesystem::path& path);

class LkasProblem final : public Problem {
 public:
  explicit LkasProblem(CarParams params = {});

  std::string name() const override { return "lkas"; }
  const ScenarioSchema& schema() const override { return schema_; }
  double fitness(const TestCase& tc) const override { return fitness_f1(tc, params_); }
  EvolutionConfig default_config() const override;
  const MarkovChain* markov_chain() const override { return &chain_; }
  std::vector<std::filesystem::path> export_scenario(const TestCase& tc,
                                                     const std::filesystem::path& prefix) const override;

  const CarParams& params() const { return params_; }

 private:
  ScenarioSchema schema_;
  MarkovChain chain_;
  CarParams params_;
};

}  // namespace scengen::lkas
