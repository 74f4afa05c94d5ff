#include <algorithm>
#include <array>
#include <cmath>

#include "common/error.hpp"
#include "lkas/lkas.hpp"

namespace scengen::lkas {

namespace {

constexpr int kLengthSamples = 64;

// One centripetal Catmull-Rom span from p1 to p2 (Barry-Goldman pyramid).
class Span {
 public:
  Span(Vec2 p0, Vec2 p1, Vec2 p2, Vec2 p3) : p_{p0, p1, p2, p3} {
    t_[0] = 0.0;
    for (int i = 1; i < 4; ++i) t_[i] = t_[i - 1] + std::sqrt(distance(p_[i - 1], p_[i]));
  }

  // u in [0, 1] maps to the knot interval [t1, t2].
  Vec2 at(double u) const {
    if (u <= 0.0) return p_[1];
    if (u >= 1.0) return p_[2];
    const double t = t_[1] + u * (t_[2] - t_[1]);
    const Vec2 a1 = lerp(p_[0], p_[1], t_[0], t_[1], t);
    const Vec2 a2 = lerp(p_[1], p_[2], t_[1], t_[2], t);
    const Vec2 a3 = lerp(p_[2], p_[3], t_[2], t_[3], t);
    const Vec2 b1 = lerp(a1, a2, t_[0], t_[2], t);
    const Vec2 b2 = lerp(a2, a3, t_[1], t_[3], t);
    return lerp(b1, b2, t_[1], t_[2], t);
  }

 private:
  static Vec2 lerp(Vec2 a, Vec2 b, double ta, double tb, double t) {
    return ((tb - t) / (tb - ta)) * a + ((t - ta) / (tb - ta)) * b;
  }

  std::array<Vec2, 4> p_;
  std::array<double, 4> t_{};
};

}  // namespace

Polyline interpolate(const Polyline& skeleton, double spacing) {
  if (!(spacing > 0.0)) throw Error(ErrorCode::invalid_argument, "spacing must be positive");
  Polyline pts;
  for (const Vec2& p : skeleton)
    if (pts.empty() || !(pts.back() == p)) pts.push_back(p);
  if (pts.size() < 2) return pts;

  // Reflected ghost points extend the first and last spans straight through.
  const std::size_t n = pts.size();
  const Vec2 head = 2.0 * pts[0] - pts[1];
  const Vec2 tail = 2.0 * pts[n - 1] - pts[n - 2];
  auto point = [&](std::ptrdiff_t i) {
    if (i < 0) return head;
    if (i >= static_cast<std::ptrdiff_t>(n)) return tail;
    return pts[static_cast<std::size_t>(i)];
  };

  Polyline out{pts.front()};
  std::array<double, kLengthSamples + 1> cumulative{};
  for (std::size_t s = 0; s + 1 < n; ++s) {
    const auto i = static_cast<std::ptrdiff_t>(s);
    const Span span(point(i - 1), point(i), point(i + 1), point(i + 2));

    Vec2 prev = span.at(0.0);
    for (int k = 1; k <= kLengthSamples; ++k) {
      const Vec2 cur = span.at(static_cast<double>(k) / kLengthSamples);
      cumulative[static_cast<std::size_t>(k)] = cumulative[static_cast<std::size_t>(k - 1)] + distance(prev, cur);
      prev = cur;
    }
    const double length = cumulative.back();
    const int pieces = std::max(1, static_cast<int>(std::ceil(length / spacing - 1e-9)));
    for (int j = 1; j < pieces; ++j) {
      const double target = length * j / pieces;
      const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), target);
      const auto hi = static_cast<std::size_t>(std::max<std::ptrdiff_t>(1, it - cumulative.begin()));
      const double c0 = cumulative[hi - 1];
      const double c1 = cumulative[hi];
      const double frac = c1 > c0 ? (target - c0) / (c1 - c0) : 0.0;
      out.push_back(span.at((static_cast<double>(hi - 1) + frac) / kLengthSamples));
    }
    out.push_back(pts[s + 1]);
  }
  return out;
}

}  // namespace scengen::lkas
