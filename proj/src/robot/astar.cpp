#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>

#include "robot/robot.hpp"

namespace scengen::robot {

namespace {

const double kSqrt2 = std::sqrt(2.0);

struct Move {
  int dx, dy;
  bool diagonal;
};

constexpr Move kMoves[] = {{1, 0, false},  {-1, 0, false}, {0, 1, false},  {0, -1, false},
                           {1, 1, true},   {1, -1, true},  {-1, 1, true},  {-1, -1, true}};

struct OpenEntry {
  double f;
  double h;
  std::size_t index;

  bool operator>(const OpenEntry& o) const { return std::tie(f, h, index) > std::tie(o.f, o.h, o.index); }
};

}  // namespace

double octile_distance(GridCell a, GridCell b) {
  const double dx = std::abs(a.x - b.x);
  const double dy = std::abs(a.y - b.y);
  return std::max(dx, dy) + (kSqrt2 - 1.0) * std::min(dx, dy);
}

std::optional<GridPath> astar(const GridMap& map) {
  const GridCell start = map.start();
  const GridCell goal = map.goal();
  if (map.occupied(start.x, start.y) || map.occupied(goal.x, goal.y)) return std::nullopt;

  const std::size_t n = static_cast<std::size_t>(map.width()) * static_cast<std::size_t>(map.height());
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<double> g(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> came_from(n, none);
  std::vector<char> closed(n, 0);
  std::priority_queue<OpenEntry, std::vector<OpenEntry>, std::greater<>> open;

  auto cell_of = [&](std::size_t i) {
    return GridCell{static_cast<int>(i % static_cast<std::size_t>(map.width())),
                    static_cast<int>(i / static_cast<std::size_t>(map.width()))};
  };

  const std::size_t s = map.index(start.x, start.y);
  const std::size_t t = map.index(goal.x, goal.y);
  g[s] = 0.0;
  const double h0 = octile_distance(start, goal);
  open.push({h0, h0, s});

  while (!open.empty()) {
    const OpenEntry top = open.top();
    open.pop();
    if (closed[top.index]) continue;
    closed[top.index] = 1;
    if (top.index == t) break;

    const GridCell c = cell_of(top.index);
    for (const Move& m : kMoves) {
      const int nx = c.x + m.dx;
      const int ny = c.y + m.dy;
      if (!map.inside(nx, ny) || map.occupied(nx, ny)) continue;
      if (m.diagonal && (map.occupied(c.x + m.dx, c.y) || map.occupied(c.x, c.y + m.dy))) continue;
      const std::size_t ni = map.index(nx, ny);
      if (closed[ni]) continue;
      const double cand = g[top.index] + (m.diagonal ? kSqrt2 : 1.0);
      if (cand < g[ni]) {
        g[ni] = cand;
        came_from[ni] = top.index;
        const double h = octile_distance({nx, ny}, goal);
        open.push({cand + h, h, ni});
      }
    }
  }
  if (!closed[t]) return std::nullopt;

  GridPath path;
  for (std::size_t i = t; i != none; i = came_from[i]) path.cells.push_back(cell_of(i));
  std::reverse(path.cells.begin(), path.cells.end());
  for (std::size_t k = 1; k < path.cells.size(); ++k) {
    const bool diagonal = path.cells[k].x != path.cells[k - 1].x && path.cells[k].y != path.cells[k - 1].y;
    (diagonal ? path.diagonal_moves : path.axis_moves) += 1;
  }
  path.length = path.axis_moves + path.diagonal_moves * kSqrt2;
  return path;
}

}  // namespace scengen::robot
