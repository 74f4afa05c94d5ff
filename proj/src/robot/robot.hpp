#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "evolution/problem.hpp"
#include "scenario/schema.hpp"

namespace scengen::robot {

inline constexpr int kMapSize = 50;          // cells of 1 m
inline constexpr int kClearance = 2;         // Chebyshev radius kept free around start and goal
inline constexpr std::size_t kElements = 50; // one obstacle per map row

// Attribute order in the robot schema.
inline constexpr std::size_t kType = 0;      // horizontal | vertical
inline constexpr std::size_t kSize = 1;      // wall length, m
inline constexpr std::size_t kPosition = 2;  // wall center column

inline constexpr double kHorizontal = 0.0;
inline constexpr double kVertical = 1.0;

struct GridCell {
  int x = 0;  // column
  int y = 0;  // row

  friend bool operator==(const GridCell&, const GridCell&) = default;
};

class GridMap {
 public:
  GridMap(int width, int height, GridCell start, GridCell goal);
  /// The 50 x 50 map with start (1, 1) and goal (48, 48).
  static GridMap standard();

  int width() const { return width_; }
  int height() const { return height_; }
  GridCell start() const { return start_; }
  GridCell goal() const { return goal_; }

  bool inside(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }
  bool occupied(int x, int y) const { return occupancy_[index(x, y)] != 0; }
  void set(int x, int y, bool value) { occupancy_[index(x, y)] = value ? 1 : 0; }
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x); }
  std::size_t occupied_count() const;

  /// Whether the cell lies within kClearance (Chebyshev) of start or goal.
  bool in_clearance(int x, int y) const;
  void clear_endpoints();

  friend bool operator==(const GridMap&, const GridMap&) = default;

 private:
  int width_;
  int height_;
  GridCell start_;
  GridCell goal_;
  std::vector<std::uint8_t> occupancy_;
};

struct GridPath {
  std::vector<GridCell> cells;
  double length = 0.0;  // axis_moves + diagonal_moves * sqrt(2)
  int axis_moves = 0;
  int diagonal_moves = 0;
};

ScenarioSchema make_schema();

/// Row i holds element i's wall. Horizontal walls cover columns
/// [p - s/2, p + s/2] of row i; vertical walls cover rows [i - s/2, i + s/2]
/// of column p (integer halves). Spans are cut at the border and the
/// start/goal clearance is cleared. Throws unless the test case has 50
/// elements.
GridMap decode_map(const TestCase& tc);

/// Shortest-distance lower bound between two cells on an 8-connected grid.
double octile_distance(GridCell a, GridCell b);

/// 8-connected A* (no corner cutting) with the octile heuristic. Ties on f are
/// broken by h, then by cell index. Empty optional when the goal is unreachable.
std::optional<GridPath> astar(const GridMap& map);

/// Path length in meters, or 0 when the goal is unreachable.
double fitness_f1(const TestCase& tc);

struct Waypoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Waypoint&, const Waypoint&) = default;
};

/// Ramer-Douglas-Peucker on the path's cell centers. Endpoints are kept;
/// a vertex is dropped only if it is within epsilon of the simplified chord.
std::vector<Waypoint> rdp_simplify(const GridPath& path, double epsilon);

/// Binary PGM (P5), white = free, black = obstacle, image row = map row.
void write_pgm(const GridMap& map, const std::filesystem::path& path);
/// Reads a PGM written by write_pgm; pixels darker than mid-gray are obstacles.
GridMap read_pgm(const std::filesystem::path& path, GridCell start, GridCell goal);
/// Plain-text world description: size, start and goal poses, and obstacle
/// rectangles (one per horizontal run of occupied cells).
void write_world(const GridMap& map, const std::filesystem::path& path);
void write_waypoints_csv(const std::vector<Waypoint>& waypoints, const std::filesystem::path& path);

class RobotProblem final : public Problem {
 public:
  RobotProblem();

  std::string name() const override { return "robot"; }
  const ScenarioSchema& schema() const override { return schema_; }
  double fitness(const TestCase& tc) const override { return fitness_f1(tc); }
  EvolutionConfig default_config() const override;
  std::vector<std::filesystem::path> export_scenario(const TestCase& tc,
                                                     const std::filesystem::path& prefix) const override;

 private:
  ScenarioSchema schema_;
};

}  // namespace scengen::robot
