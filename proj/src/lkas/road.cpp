#include <cmath>
#include <numbers>

#include "common/error.hpp"
#include "lkas/lkas.hpp"

namespace scengen::lkas {

ScenarioSchema make_schema() {
  return ScenarioSchema(
      "lkas",
      {AttributeSpec::categorical("segment_type", {"straight", "turn_left", "turn_right"}),
       AttributeSpec::integer_range("length", 5, 50, 1, Presence{kType, {kStraight}}),
       AttributeSpec::integer_range("angle", 5, 85, 5, Presence{kType, {kTurnLeft, kTurnRight}})},
      2, 25);
}

MarkovChain default_markov_chain() {
  MarkovChain chain;
  chain.attribute = kType;
  chain.states = {kStraight, kTurnLeft, kTurnRight};
  chain.transition = {{0.2, 0.4, 0.4}, {0.4, 0.3, 0.3}, {0.4, 0.3, 0.3}};
  chain.initial = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  return chain;
}

Polyline decode_road(const TestCase& tc) {
  if (tc.empty()) throw Error(ErrorCode::invalid_argument, "empty road");
  constexpr double deg = std::numbers::pi / 180.0;

  Polyline out{kStartPoint};
  Vec2 pos = kStartPoint;
  double heading = std::numbers::pi / 2.0;

  for (const auto& e : tc.elements) {
    const double type = e.values.at(kType).value();
    if (type == kStraight) {
      const double length = e.values.at(kLength).value();
      const Vec2 dir{std::cos(heading), std::sin(heading)};
      for (double s = kStraightStep; s < length; s += kStraightStep) out.push_back(pos + s * dir);
      pos = pos + length * dir;
      out.push_back(pos);
    } else {
      const double sign = type == kTurnLeft ? 1.0 : -1.0;
      const double angle = e.values.at(kAngle).value();
      // Center of the arc sits on the inner side, one radius away.
      const Vec2 radial{std::cos(heading - sign * std::numbers::pi / 2.0),
                        std::sin(heading - sign * std::numbers::pi / 2.0)};
      const Vec2 center = pos - kTurnRadius * radial;
      const double phi0 = std::atan2(radial.y, radial.x);
      const int steps = static_cast<int>(std::ceil(angle / kArcStepDeg - 1e-9));
      for (int i = 1; i <= steps; ++i) {
        const double swept = std::min(angle, i * kArcStepDeg) * deg;
        const double phi = phi0 + sign * swept;
        out.push_back(center + kTurnRadius * Vec2{std::cos(phi), std::sin(phi)});
      }
      pos = out.back();
      heading += sign * angle * deg;
    }
  }
  return out;
}

}  // namespace scengen::lkas
