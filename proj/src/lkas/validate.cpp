#include <cmath>
#include <limits>
#include <sstream>

#include "lkas/lkas.hpp"

namespace scengen::lkas {

namespace {

constexpr double kIntersectionCell = 4.0;

double circumradius(Vec2 a, Vec2 b, Vec2 c) {
  const double twice_area = std::abs(cross(b - a, c - a));
  if (twice_area == 0.0) return std::numeric_limits<double>::infinity();
  return distance(a, b) * distance(b, c) * distance(c, a) / (2.0 * twice_area);
}

std::string describe(Vec2 p) {
  std::ostringstream os;
  os << '(' << p.x << ", " << p.y << ')';
  return os.str();
}

}  // namespace

std::string to_string(RoadDefect defect) {
  switch (defect) {
    case RoadDefect::none: return "valid";
    case RoadDefect::out_of_bounds: return "out_of_bounds";
    case RoadDefect::self_intersecting: return "self_intersecting";
    case RoadDefect::too_sharp: return "too_sharp";
  }
  return "unknown";
}

double min_turning_radius(const Polyline& dense) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < dense.size(); ++i)
    best = std::min(best, circumradius(dense[i - 1], dense[i], dense[i + 1]));
  return best;
}

RoadCheck validate_road(const Polyline& dense) {
  if (dense.size() < 2) return {RoadDefect::out_of_bounds, "road has fewer than two points"};

  const double lo = kMapMargin;
  const double hi = kMapSize - kMapMargin;
  for (const Vec2& p : dense)
    if (!(p.x >= lo && p.x <= hi && p.y >= lo && p.y <= hi))
      return {RoadDefect::out_of_bounds, "point " + describe(p) + " outside the drivable area"};

  const SegmentGrid grid(dense, kIntersectionCell);
  bool crossing = false;
  std::size_t first = 0, second = 0;
  grid.for_each_candidate_pair([&](std::size_t i, std::size_t j) {
    if (crossing) return;
    if (i > j) std::swap(i, j);
    if (j == i + 1) return;
    if (segments_intersect(dense[i], dense[i + 1], dense[j], dense[j + 1])) {
      crossing = true;
      first = i;
      second = j;
    }
  });
  if (crossing)
    return {RoadDefect::self_intersecting,
            "segments " + std::to_string(first) + " and " + std::to_string(second) + " cross"};

  const double radius = min_turning_radius(dense);
  if (radius < kMinRadius) {
    std::ostringstream os;
    os << "turning radius " << radius << " m below " << kMinRadius << " m";
    return {RoadDefect::too_sharp, os.str()};
  }
  return {};
}

}  // namespace scengen::lkas
