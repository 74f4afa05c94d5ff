#include "thermostat/thermostat.hpp"

#include <cmath>

#include "common/error.hpp"

namespace scengen::thermostat {

namespace {

constexpr std::size_t kMinElements = 2;
constexpr std::size_t kMaxElements = 24;

ModelCoefficients blend(std::initializer_list<ModelCoefficients> sets) {
  ModelCoefficients out;
  for (const auto& c : sets) {
    out.k_on1 += c.k_on1;
    out.k_on2 += c.k_on2;
    out.k_off1 += c.k_off1;
    out.k_off2 += c.k_off2;
  }
  const double n = static_cast<double>(sets.size());
  out.k_on1 /= n;
  out.k_on2 /= n;
  out.k_off1 /= n;
  out.k_off2 /= n;
  return out;
}

}  // namespace

CoefficientTable default_coefficients() {
  const ModelCoefficients m1{7.7, 0.11887928, 5.6, 0.02929884};
  const ModelCoefficients m2{7.9, 0.11180434, 5.2, 0.04803319};
  const ModelCoefficients m3{6.0, 0.14704908, 4.8, 0.1203876};
  return {{1, m1}, {2, m2}, {3, m3}, {4, blend({m1, m2})}, {5, blend({m2, m3})}, {6, blend({m1, m3})},
          {7, blend({m1, m2, m3})}};
}

ScenarioSchema make_schema() {
  return ScenarioSchema("thermostat",
                        {AttributeSpec::integer_range("temperature", 16, 25),
                         AttributeSpec::integer_range("duration", 60, 240, 15),
                         AttributeSpec::integer_range("mode", 1, 7)},
                        kMinElements, kMaxElements);
}

Schedule decode_schedule(const TestCase& tc) {
  if (tc.empty()) throw Error(ErrorCode::invalid_argument, "empty thermostat schedule");
  Schedule s;
  for (const auto& e : tc.elements) {
    const double setpoint = e.values.at(kSetpoint).value();
    const auto minutes = static_cast<long>(std::lround(e.values.at(kDuration).value()));
    const int mode = static_cast<int>(std::lround(e.values.at(kMode).value()));
    s.setpoints.insert(s.setpoints.end(), static_cast<std::size_t>(minutes), setpoint);
    s.modes.insert(s.modes.end(), static_cast<std::size_t>(minutes), mode);
  }
  return s;
}

RestrictionCheck check_restrictions(const TestCase& tc) {
  double total = 0.0;
  for (const auto& e : tc.elements) total += e.values.at(kDuration).value();
  if (!(total < kDayMinutes))
    return {Restriction::total_duration, "schedule lasts " + std::to_string(static_cast<long>(total)) + " min"};
  for (std::size_t i = 0; i + 1 < tc.size(); ++i) {
    const double step = std::abs(tc.elements[i].values.at(kSetpoint).value() -
                                 tc.elements[i + 1].values.at(kSetpoint).value());
    if (!(step < kMaxSetpointStep))
      return {Restriction::setpoint_step, "setpoint jump between elements " + std::to_string(i) + " and " +
                                              std::to_string(i + 1)};
  }
  return {};
}

double on_response(const ModelCoefficients& c, double t0, double t) {
  return c.k_on1 * (1.0 - std::exp(-c.k_on2 * t)) + t0;
}

double off_response(const ModelCoefficients& c, double t0, double t) {
  // same curve as k1*exp(-k2*t) + t0 - k1, but exact at t = 0
  return t0 - c.k_off1 * (1.0 - std::exp(-c.k_off2 * t));
}

ThermostatTrace simulate(const TestCase& tc, const CoefficientTable& table) {
  Schedule schedule = decode_schedule(tc);
  for (int mode : schedule.modes)
    if (!table.contains(mode))
      throw Error(ErrorCode::invalid_argument, "no coefficients for thermostat mode " + std::to_string(mode));

  ThermostatTrace trace;
  const std::size_t n = schedule.setpoints.size();
  trace.outputs.resize(n);

  double y = schedule.setpoints.front();
  double t0 = y;
  double t = 0.0;
  Heater state = Heater::off;
  const ModelCoefficients* coeff = nullptr;
  int coeff_mode = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Heater wanted = y < schedule.setpoints[i] ? Heater::on : Heater::off;
    if (i == 0 || wanted != state) {
      state = wanted;
      t0 = y;
      t = 0.0;
      trace.mode_switches.emplace_back(static_cast<int>(i), state);
    }
    if (coeff == nullptr || coeff_mode != schedule.modes[i]) {
      coeff_mode = schedule.modes[i];
      coeff = &table.at(coeff_mode);
    }
    y = state == Heater::on ? on_response(*coeff, t0, t) : off_response(*coeff, t0, t);
    trace.outputs[i] = y;
    t += 1.0;
  }
  trace.setpoints = std::move(schedule.setpoints);
  return trace;
}

double fitness_f1(const TestCase& tc, const CoefficientTable& table) {
  if (tc.empty() || !check_restrictions(tc).feasible()) return 0.0;
  const ThermostatTrace trace = simulate(tc, table);
  double sum = 0.0;
  for (std::size_t i = 0; i < trace.outputs.size(); ++i) {
    const double r = trace.outputs[i] - trace.setpoints[i];
    sum += r * r;
  }
  return std::sqrt(sum / static_cast<double>(trace.outputs.size()));
}

}  // namespace scengen::thermostat
