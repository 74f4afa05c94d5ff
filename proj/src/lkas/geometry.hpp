#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace scengen::lkas {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(b - a); }

using Polyline = std::vector<Vec2>;

double polyline_length(const Polyline& line);

struct SegmentProjection {
  double distance = 0.0;  // unsigned
  double side = 0.0;      // sign of cross(b - a, p - a): > 0 left of a->b
  double t = 0.0;         // position of the foot point along the segment, [0, 1]
};

SegmentProjection project_onto_segment(Vec2 p, Vec2 a, Vec2 b);

/// Closed-segment intersection test, collinear overlaps and touching
/// endpoints included.
bool segments_intersect(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2);

/// Uniform bucket grid over the segments of a polyline.
class SegmentGrid {
 public:
  SegmentGrid(const Polyline& line, double cell_size);

  struct Nearest {
    std::size_t segment = 0;
    double signed_distance = 0.0;  // positive left of the segment direction
    double t = 0.0;                // foot point along the segment, [0, 1]
  };

  /// Closest segment to `p`. The line must have at least two points.
  Nearest nearest(Vec2 p) const;

  /// Every pair (i, j), i < j, of segments sharing a bucket.
  template <typename F>
  void for_each_candidate_pair(F&& visit) const {
    for (const auto& bucket : buckets_)
      for (std::size_t u = 0; u < bucket.size(); ++u)
        for (std::size_t v = u + 1; v < bucket.size(); ++v) visit(bucket[u], bucket[v]);
  }

 private:
  int cell_x(double x) const;
  int cell_y(double y) const;

  const Polyline& line_;
  double cell_;
  double min_x_ = 0.0;
  double min_y_ = 0.0;
  int nx_ = 1;
  int ny_ = 1;
  std::vector<std::vector<std::size_t>> buckets_;
};

}  // namespace scengen::lkas
