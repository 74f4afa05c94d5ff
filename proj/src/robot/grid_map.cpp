#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "common/error.hpp"
#include "robot/robot.hpp"

namespace scengen::robot {

GridMap::GridMap(int width, int height, GridCell start, GridCell goal)
    : width_(width), height_(height), start_(start), goal_(goal) {
  if (width <= 0 || height <= 0) throw Error(ErrorCode::invalid_argument, "grid dimensions must be positive");
  if (!inside(start.x, start.y) || !inside(goal.x, goal.y))
    throw Error(ErrorCode::invalid_argument, "start and goal must lie inside the grid");
  occupancy_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

GridMap GridMap::standard() { return GridMap(kMapSize, kMapSize, {1, 1}, {kMapSize - 2, kMapSize - 2}); }

std::size_t GridMap::occupied_count() const {
  return static_cast<std::size_t>(std::count(occupancy_.begin(), occupancy_.end(), 1));
}

bool GridMap::in_clearance(int x, int y) const {
  auto near = [&](GridCell c) { return std::abs(c.x - x) <= kClearance && std::abs(c.y - y) <= kClearance; };
  return near(start_) || near(goal_);
}

void GridMap::clear_endpoints() {
  for (GridCell c : {start_, goal_})
    for (int y = c.y - kClearance; y <= c.y + kClearance; ++y)
      for (int x = c.x - kClearance; x <= c.x + kClearance; ++x)
        if (inside(x, y)) set(x, y, false);
}

ScenarioSchema make_schema() {
  return ScenarioSchema("robot",
                        {AttributeSpec::categorical("obstacle_type", {"horizontal", "vertical"}),
                         AttributeSpec::integer_range("obstacle_size", 5, 15),
                         AttributeSpec::integer_range("obstacle_position", 1, kMapSize)},
                        kElements, kElements);
}

GridMap decode_map(const TestCase& tc) {
  if (tc.size() != kElements)
    throw Error(ErrorCode::invalid_argument, "robot scenario needs exactly 50 elements, got " + std::to_string(tc.size()));
  GridMap map = GridMap::standard();
  for (std::size_t i = 0; i < tc.size(); ++i) {
    const auto& e = tc.elements[i];
    const int row = static_cast<int>(i);
    const int half = static_cast<int>(std::lround(e.values.at(kSize).value())) / 2;
    const int center = static_cast<int>(std::lround(e.values.at(kPosition).value()));
    if (e.values.at(kType).value() == kHorizontal) {
      for (int x = std::max(0, center - half); x <= std::min(map.width() - 1, center + half); ++x) map.set(x, row, true);
    } else if (center >= 0 && center < map.width()) {
      for (int y = std::max(0, row - half); y <= std::min(map.height() - 1, row + half); ++y) map.set(center, y, true);
    }
  }
  map.clear_endpoints();
  return map;
}

double fitness_f1(const TestCase& tc) {
  const auto path = astar(decode_map(tc));
  return path ? path->length : 0.0;
}

}  // namespace scengen::robot
