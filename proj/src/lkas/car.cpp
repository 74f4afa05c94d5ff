#include <algorithm>
#include <cmath>

#include "common/error.hpp"
#include "lkas/lkas.hpp"

namespace scengen::lkas {

namespace {

constexpr double kMinSpeed = 1.0;
constexpr double kGoalRadius = 2.0;
constexpr double kStepAllowance = 3.0;
constexpr double kLookupCell = 5.0;

}  // namespace

void CarParams::validate() const {
  for (double v : {v0, k, alpha, beta, e, dt})
    if (!(v > 0.0) || !std::isfinite(v))
      throw Error(ErrorCode::invalid_argument, "car parameters must be positive and finite");
}

Polyline CarTrajectory::positions() const {
  Polyline out;
  out.reserve(states.size());
  for (const auto& s : states) out.push_back({s.x, s.y});
  return out;
}

namespace {

// Assumes a validated centerline.
CarTrajectory drive(const Polyline& dense, const CarParams& params, double lateral_offset) {
  const SegmentGrid grid(dense, kLookupCell);
  const Vec2 goal = dense.back();
  const std::size_t last_segment = dense.size() - 2;
  const Vec2 dir = dense[1] - dense[0];

  CarState s;
  s.theta = std::atan2(dir.y, dir.x);
  s.x = dense[0].x - lateral_offset * std::sin(s.theta);
  s.y = dense[0].y + lateral_offset * std::cos(s.theta);
  s.v = params.v0;

  const double nominal_steps = polyline_length(dense) / params.v0 / params.dt;
  const auto max_steps = static_cast<long>(std::ceil(nominal_steps * kStepAllowance));

  CarTrajectory out;
  out.states.reserve(static_cast<std::size_t>(max_steps) + 1);
  for (long step = 0;; ++step) {
    s.t = static_cast<double>(step) * params.dt;
    const SegmentGrid::Nearest nearest = grid.nearest({s.x, s.y});
    s.d = nearest.signed_distance;
    out.states.push_back(s);
    out.max_deviation = std::max(out.max_deviation, std::abs(s.d));
    const bool past_end = nearest.segment == last_segment && nearest.t >= 1.0;
    if (distance({s.x, s.y}, goal) < kGoalRadius || past_end || step >= max_steps) break;

    double turn_rate = 0.0;
    double accel = params.beta;
    if (std::abs(s.d) > params.e) {
      // Right of the road (d < 0) steers left, and the reverse.
      turn_rate = (s.d < 0.0 ? 1.0 : -1.0) * std::atan(params.k / s.v);
      accel = -params.alpha;
    }
    const double x = s.x + s.v * std::cos(s.theta) * params.dt;
    const double y = s.y + s.v * std::sin(s.theta) * params.dt;
    s.x = x;
    s.y = y;
    s.theta += turn_rate * params.dt;
    s.v = std::max(kMinSpeed, s.v + accel * params.dt);
  }
  return out;
}

}  // namespace

CarTrajectory simulate_car(const Polyline& dense, const CarParams& params, double lateral_offset) {
  params.validate();
  const RoadCheck check = validate_road(dense);
  if (!check.valid()) throw Error(ErrorCode::domain_violation, "cannot drive an invalid centerline: " + check.reason);
  return drive(dense, params, lateral_offset);
}

double fitness_f1(const TestCase& tc, const CarParams& params) {
  const Polyline dense = interpolate(decode_road(tc));
  if (!validate_road(dense).valid()) return 0.0;
  params.validate();
  return drive(dense, params, 0.0).max_deviation;
}

}  // namespace scengen::lkas
