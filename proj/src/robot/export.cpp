#include <cctype>
#include <fstream>
#include <iomanip>
#include <string>

#include "common/error.hpp"
#include "robot/robot.hpp"

namespace scengen::robot {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode);
  if (!out) throw Error(ErrorCode::io, "cannot write " + path.string());
  return out;
}

// Skips whitespace and '#' comments between PGM header tokens.
void skip_pgm_space(std::istream& in) {
  while (in) {
    int c = in.peek();
    if (c == '#') {
      std::string line;
      std::getline(in, line);
    } else if (std::isspace(c)) {
      in.get();
    } else {
      break;
    }
  }
}

}  // namespace

void write_pgm(const GridMap& map, const std::filesystem::path& path) {
  auto out = open_for_write(path, std::ios::out | std::ios::binary);
  out << "P5\n" << map.width() << ' ' << map.height() << "\n255\n";
  for (int y = 0; y < map.height(); ++y)
    for (int x = 0; x < map.width(); ++x) out.put(static_cast<char>(map.occupied(x, y) ? 0 : 255));
  if (!out) throw Error(ErrorCode::io, "failed writing " + path.string());
}

GridMap read_pgm(const std::filesystem::path& path, GridCell start, GridCell goal) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot read " + path.string());
  std::string magic;
  in >> magic;
  if (magic != "P5") throw Error(ErrorCode::io, path.string() + ": not a binary PGM");
  int width = 0, height = 0, maxval = 0;
  skip_pgm_space(in);
  in >> width;
  skip_pgm_space(in);
  in >> height;
  skip_pgm_space(in);
  in >> maxval;
  in.get();
  if (!in || width <= 0 || height <= 0 || maxval <= 0 || maxval > 255)
    throw Error(ErrorCode::io, path.string() + ": bad PGM header");
  GridMap map(width, height, start, goal);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      const int v = in.get();
      if (v == EOF) throw Error(ErrorCode::io, path.string() + ": truncated pixel data");
      map.set(x, y, v * 2 < maxval);
    }
  return map;
}

void write_world(const GridMap& map, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << std::fixed << std::setprecision(1);
  out << "# occupancy world, 1 m cells, coordinates are cell centers\n";
  out << "size " << map.width() << ' ' << map.height() << '\n';
  out << "start " << map.start().x + 0.5 << ' ' << map.start().y + 0.5 << " 0\n";
  out << "goal " << map.goal().x + 0.5 << ' ' << map.goal().y + 0.5 << " 0\n";
  // One rectangle per horizontal run of occupied cells: center x y, size w h.
  for (int y = 0; y < map.height(); ++y) {
    int x = 0;
    while (x < map.width()) {
      if (!map.occupied(x, y)) {
        ++x;
        continue;
      }
      int end = x;
      while (end < map.width() && map.occupied(end, y)) ++end;
      const double w = end - x;
      out << "block " << x + w / 2.0 << ' ' << y + 0.5 << ' ' << w << " 1.0\n";
      x = end;
    }
  }
  if (!out) throw Error(ErrorCode::io, "failed writing " + path.string());
}

void write_waypoints_csv(const std::vector<Waypoint>& waypoints, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << "x,y\n" << std::setprecision(17);
  for (const auto& w : waypoints) out << w.x << ',' << w.y << '\n';
  if (!out) throw Error(ErrorCode::io, "failed writing " + path.string());
}

}  // namespace scengen::robot
