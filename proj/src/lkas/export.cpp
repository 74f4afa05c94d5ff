#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "common/error.hpp"
#include "lkas/lkas.hpp"

namespace scengen::lkas {

void write_road_json(const Polyline& dense, const std::filesystem::path& path) {
  nlohmann::json doc;
  doc["map_size"] = kMapSize;
  doc["lane_width"] = kLaneWidth;
  auto& points = doc["points"] = nlohmann::json::array();
  for (const Vec2& p : dense) points.push_back({p.x, p.y});
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io, "cannot write " + path.string());
  out << doc.dump(1) << '\n';
  if (!out) throw Error(ErrorCode::io, "failed writing " + path.string());
}

Polyline read_road_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot read " + path.string());
  try {
    const auto doc = nlohmann::json::parse(in);
    Polyline out;
    for (const auto& p : doc.at("points")) out.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::io, path.string() + ": " + e.what());
  }
}

void write_trajectory_csv(const CarTrajectory& trajectory, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io, "cannot write " + path.string());
  out << "t,x,y,theta,v,d\n" << std::setprecision(17);
  for (const auto& s : trajectory.states)
    out << s.t << ',' << s.x << ',' << s.y << ',' << s.theta << ',' << s.v << ',' << s.d << '\n';
  if (!out) throw Error(ErrorCode::io, "failed writing " + path.string());
}

Polyline read_trajectory_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot read " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::io, path.string() + ": empty file");

  auto split = [](const std::string& text) {
    std::vector<std::string> cells;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
  };
  const auto header = split(line);
  const auto column = [&](const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw Error(ErrorCode::io, path.string() + ": missing column " + name);
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t cx = column("x");
  const std::size_t cy = column("y");

  Polyline out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() <= std::max(cx, cy)) throw Error(ErrorCode::io, path.string() + ": short row");
    try {
      out.push_back({std::stod(cells[cx]), std::stod(cells[cy])});
    } catch (const std::exception&) {
      throw Error(ErrorCode::io, path.string() + ": bad number in row");
    }
  }
  return out;
}

}  // namespace scengen::lkas
