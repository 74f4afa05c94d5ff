#include <algorithm>
#include <cmath>
#include <limits>

#include "common/error.hpp"
#include "lkas/lkas.hpp"

namespace scengen::lkas {

namespace {

double squared(Vec2 a, Vec2 b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Squared directed distance sup_a inf_b, skipping the inner loop as soon as
// a point of b is closer than the running maximum.
double directed(const Polyline& a, const Polyline& b, double running) {
  for (const Vec2& p : a) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const Vec2& q : b) {
      nearest = std::min(nearest, squared(p, q));
      if (nearest <= running) break;
    }
    running = std::max(running, nearest);
  }
  return running;
}

}  // namespace

double hausdorff(const Polyline& a, const Polyline& b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::invalid_argument, "hausdorff needs non-empty point sets");
  return std::sqrt(directed(b, a, directed(a, b, 0.0)));
}

}  // namespace scengen::lkas
