#include <fstream>

#include <json.hpp>

#include "common/error.hpp"
#include "thermostat/thermostat.hpp"

namespace scengen::thermostat {

CoefficientTable load_coefficients(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open coefficient table " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
    CoefficientTable table;
    for (const auto& [mode, c] : doc.items()) {
      ModelCoefficients m{c.at("k_on1").get<double>(), c.at("k_on2").get<double>(), c.at("k_off1").get<double>(),
                          c.at("k_off2").get<double>()};
      if (!m.positive()) throw Error(ErrorCode::invalid_argument, "coefficients for mode " + mode + " must be positive");
      table[std::stoi(mode)] = m;
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::invalid_argument, "malformed coefficient table " + path.string() + ": " + e.what());
  }
}

void save_coefficients(const CoefficientTable& table, const std::filesystem::path& path) {
  nlohmann::json doc = nlohmann::json::object();
  for (const auto& [mode, c] : table)
    doc[std::to_string(mode)] = {{"k_on1", c.k_on1}, {"k_on2", c.k_on2}, {"k_off1", c.k_off1}, {"k_off2", c.k_off2}};
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io, "cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

void write_trace_csv(const ThermostatTrace& trace, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io, "cannot write " + path.string());
  out << "minute,setpoint,output\n";
  out.precision(10);
  for (std::size_t i = 0; i < trace.outputs.size(); ++i)
    out << i << ',' << trace.setpoints[i] << ',' << trace.outputs[i] << '\n';
}

}  // namespace scengen::thermostat
