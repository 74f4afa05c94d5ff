#include "lkas/geometry.hpp"

#include <algorithm>
#include <limits>

#include "common/error.hpp"

namespace scengen::lkas {

double polyline_length(const Polyline& line) {
  double total = 0.0;
  for (std::size_t i = 1; i < line.size(); ++i) total += distance(line[i - 1], line[i]);
  return total;
}

SegmentProjection project_onto_segment(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const Vec2 ap = p - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(ap, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const Vec2 foot = a + t * ab;
  return {distance(p, foot), cross(ab, ap), t};
}

namespace {

int orientation(Vec2 a, Vec2 b, Vec2 c) {
  const double v = cross(b - a, c - a);
  return (v > 0.0) - (v < 0.0);
}

bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2) {
  const int o1 = orientation(p1, p2, q1);
  const int o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1);
  const int o4 = orientation(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

SegmentGrid::SegmentGrid(const Polyline& line, double cell_size) : line_(line), cell_(cell_size) {
  if (line.size() < 2) throw Error(ErrorCode::invalid_argument, "segment grid needs at least two points");
  if (!(cell_size > 0.0)) throw Error(ErrorCode::invalid_argument, "cell size must be positive");
  double max_x = line[0].x, max_y = line[0].y;
  min_x_ = line[0].x;
  min_y_ = line[0].y;
  for (const Vec2& p : line) {
    min_x_ = std::min(min_x_, p.x);
    min_y_ = std::min(min_y_, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  nx_ = static_cast<int>(std::floor((max_x - min_x_) / cell_)) + 1;
  ny_ = static_cast<int>(std::floor((max_y - min_y_) / cell_)) + 1;
  buckets_.assign(static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_), {});
  for (std::size_t s = 0; s + 1 < line.size(); ++s) {
    const Vec2 a = line[s];
    const Vec2 b = line[s + 1];
    for (int cy = cell_y(std::min(a.y, b.y)); cy <= cell_y(std::max(a.y, b.y)); ++cy)
      for (int cx = cell_x(std::min(a.x, b.x)); cx <= cell_x(std::max(a.x, b.x)); ++cx)
        buckets_[static_cast<std::size_t>(cy) * static_cast<std::size_t>(nx_) + static_cast<std::size_t>(cx)]
            .push_back(s);
  }
}

int SegmentGrid::cell_x(double x) const {
  return std::clamp(static_cast<int>(std::floor((x - min_x_) / cell_)), 0, nx_ - 1);
}

int SegmentGrid::cell_y(double y) const {
  return std::clamp(static_cast<int>(std::floor((y - min_y_) / cell_)), 0, ny_ - 1);
}

SegmentGrid::Nearest SegmentGrid::nearest(Vec2 p) const {
  // Ring search around the query's (clamped) bucket. Anything not yet seen
  // after ring r lies at least r cells away.
  const int qx = cell_x(p.x);
  const int qy = cell_y(p.y);
  const int max_ring = std::max(nx_, ny_);

  double best = std::numeric_limits<double>::infinity();
  Nearest result;
  for (int r = 0; r <= max_ring; ++r) {
    for (int cy = qy - r; cy <= qy + r; ++cy) {
      if (cy < 0 || cy >= ny_) continue;
      const bool edge_row = cy == qy - r || cy == qy + r;
      for (int cx = qx - r; cx <= qx + r; cx += (edge_row ? 1 : 2 * r)) {
        if (cx >= 0 && cx < nx_) {
          for (std::size_t s : buckets_[static_cast<std::size_t>(cy) * static_cast<std::size_t>(nx_) +
                                        static_cast<std::size_t>(cx)]) {
            const SegmentProjection proj = project_onto_segment(p, line_[s], line_[s + 1]);
            if (proj.distance < best || (proj.distance == best && s < result.segment)) {
              best = proj.distance;
              result.segment = s;
              result.signed_distance = proj.side < 0.0 ? -proj.distance : proj.distance;
              result.t = proj.t;
            }
          }
        }
        if (r == 0) break;
      }
    }
    if (best <= r * cell_) break;
  }
  return result;
}

}  // namespace scengen::lkas
