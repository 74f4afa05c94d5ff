#include <algorithm>
#include <cmath>

#include "common/error.hpp"
#include "robot/robot.hpp"

namespace scengen::robot {

namespace {

double distance_to_segment(const Waypoint& p, const Waypoint& a, const Waypoint& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return std::hypot(p.x - a.x, p.y - a.y);
  double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

void simplify(const std::vector<Waypoint>& pts, std::size_t first, std::size_t last, double epsilon,
              std::vector<char>& keep) {
  if (last <= first + 1) return;
  double worst = -1.0;
  std::size_t worst_index = first;
  for (std::size_t i = first + 1; i < last; ++i) {
    const double d = distance_to_segment(pts[i], pts[first], pts[last]);
    if (d > worst) {
      worst = d;
      worst_index = i;
    }
  }
  if (worst > epsilon) {
    keep[worst_index] = 1;
    simplify(pts, first, worst_index, epsilon, keep);
    simplify(pts, worst_index, last, epsilon, keep);
  }
}

}  // namespace

std::vector<Waypoint> rdp_simplify(const GridPath& path, double epsilon) {
  if (path.cells.size() < 2) throw Error(ErrorCode::invalid_argument, "path needs at least two cells");
  if (!(epsilon >= 0.0)) throw Error(ErrorCode::invalid_argument, "epsilon must be non-negative");

  std::vector<Waypoint> pts;
  pts.reserve(path.cells.size());
  for (const auto& c : path.cells) pts.push_back({c.x + 0.5, c.y + 0.5});

  std::vector<char> keep(pts.size(), 0);
  keep.front() = keep.back() = 1;
  simplify(pts, 0, pts.size() - 1, epsilon, keep);

  std::vector<Waypoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (keep[i]) out.push_back(pts[i]);
  return out;
}

}  // namespace scengen::robot
