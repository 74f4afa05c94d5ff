#include "scenario/schema.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "common/error.hpp"

namespace scengen {

namespace {

constexpr double kGridTolerance = 1e-9;

std::size_t grid_points(const Interval& iv) {
  return static_cast<std::size_t>(std::floor((iv.max - iv.min) / iv.step + kGridTolerance)) + 1;
}

void validate_domain(const std::string& name, const DiscreteSet& set) {
  if (set.values.empty()) throw Error(ErrorCode::invalid_argument, "attribute '" + name + "': empty set");
  std::set<double> seen(set.values.begin(), set.values.end());
  if (seen.size() != set.values.size())
    throw Error(ErrorCode::invalid_argument, "attribute '" + name + "': duplicate values");
  if (!set.labels.empty() && set.labels.size() != set.values.size())
    throw Error(ErrorCode::invalid_argument, "attribute '" + name + "': label count mismatch");
}

void validate_domain(const std::string& name, const Interval& iv) {
  if (!(iv.min <= iv.max) || !(iv.step > 0.0) || !std::isfinite(iv.min) || !std::isfinite(iv.max))
    throw Error(ErrorCode::invalid_argument, "attribute '" + name + "': bad interval");
}

std::string format_value(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

AttributeSpec::AttributeSpec(std::string name, DiscreteSet set, std::optional<Presence> presence)
    : name_(std::move(name)), domain_(std::move(set)), presence_(std::move(presence)) {
  validate_domain(name_, std::get<DiscreteSet>(domain_));
}

AttributeSpec::AttributeSpec(std::string name, Interval interval, std::optional<Presence> presence)
    : name_(std::move(name)), domain_(interval), presence_(std::move(presence)) {
  validate_domain(name_, interval);
}

AttributeSpec AttributeSpec::integer_range(std::string name, int first, int last, int step,
                                           std::optional<Presence> presence) {
  DiscreteSet set;
  for (int v = first; v <= last; v += step) set.values.push_back(v);
  return AttributeSpec(std::move(name), std::move(set), std::move(presence));
}

AttributeSpec AttributeSpec::categorical(std::string name, std::vector<std::string> labels) {
  DiscreteSet set;
  for (std::size_t i = 0; i < labels.size(); ++i) set.values.push_back(static_cast<double>(i));
  set.labels = std::move(labels);
  return AttributeSpec(std::move(name), std::move(set));
}

bool AttributeSpec::is_categorical() const {
  const auto* set = std::get_if<DiscreteSet>(&domain_);
  return set != nullptr && !set->labels.empty();
}

bool AttributeSpec::contains(double value) const {
  if (const auto* set = std::get_if<DiscreteSet>(&domain_))
    return std::find(set->values.begin(), set->values.end(), value) != set->values.end();
  const auto& iv = std::get<Interval>(domain_);
  if (value < iv.min || value > iv.max) return false;
  double k = (value - iv.min) / iv.step;
  return std::abs(k - std::round(k)) < kGridTolerance * std::max(1.0, std::abs(k));
}

double AttributeSpec::sample(Rng& rng) const {
  if (const auto* set = std::get_if<DiscreteSet>(&domain_)) return set->values[uniform_index(rng, set->values.size())];
  const auto& iv = std::get<Interval>(domain_);
  return iv.min + static_cast<double>(uniform_index(rng, grid_points(iv))) * iv.step;
}

double AttributeSpec::snap(double value) const {
  const auto* iv = std::get_if<Interval>(&domain_);
  if (iv == nullptr) return value;
  double k = std::round((value - iv->min) / iv->step);
  k = std::clamp(k, 0.0, static_cast<double>(grid_points(*iv) - 1));
  return iv->min + k * iv->step;
}

std::size_t AttributeSpec::cardinality() const {
  if (const auto* set = std::get_if<DiscreteSet>(&domain_)) return set->values.size();
  return grid_points(std::get<Interval>(domain_));
}

std::optional<std::string> AttributeSpec::label_of(double value) const {
  const auto* set = std::get_if<DiscreteSet>(&domain_);
  if (set == nullptr || set->labels.empty()) return std::nullopt;
  auto it = std::find(set->values.begin(), set->values.end(), value);
  if (it == set->values.end()) return std::nullopt;
  return set->labels[static_cast<std::size_t>(it - set->values.begin())];
}

std::optional<double> AttributeSpec::value_of(std::string_view label) const {
  const auto* set = std::get_if<DiscreteSet>(&domain_);
  if (set == nullptr) return std::nullopt;
  for (std::size_t i = 0; i < set->labels.size(); ++i)
    if (set->labels[i] == label) return set->values[i];
  return std::nullopt;
}

ScenarioSchema::ScenarioSchema(std::string name, std::vector<AttributeSpec> attributes,
                               std::size_t min_elements, std::size_t max_elements)
    : name_(std::move(name)),
      attributes_(std::move(attributes)),
      min_elements_(min_elements),
      max_elements_(max_elements) {
  if (attributes_.empty()) throw Error(ErrorCode::invalid_argument, "schema '" + name_ + "' has no attributes");
  if (min_elements_ < 1 || min_elements_ > max_elements_)
    throw Error(ErrorCode::invalid_argument, "schema '" + name_ + "': need 1 <= min_elements <= max_elements");
  std::set<std::string> names;
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    const auto& a = attributes_[i];
    if (!names.insert(a.name()).second)
      throw Error(ErrorCode::invalid_argument, "schema '" + name_ + "': duplicate attribute " + a.name());
    if (a.presence() && a.presence()->controller >= i)
      throw Error(ErrorCode::invalid_argument,
                  "schema '" + name_ + "': presence of " + a.name() + " must depend on an earlier attribute");
  }
}

std::optional<std::size_t> ScenarioSchema::index_of(std::string_view attribute) const {
  for (std::size_t i = 0; i < attributes_.size(); ++i)
    if (attributes_[i].name() == attribute) return i;
  return std::nullopt;
}

bool ScenarioSchema::is_present(const Element& element, std::size_t i) const {
  const auto& presence = attributes_[i].presence();
  if (!presence) return true;
  const Cell& controller = element.values[presence->controller];
  if (!controller) return false;
  return std::find(presence->when.begin(), presence->when.end(), *controller) != presence->when.end();
}

void ScenarioSchema::conform(Element& element, Rng& rng) const {
  element.values.resize(attributes_.size());
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    if (!is_present(element, i))
      element.values[i].reset();
    else if (!element.values[i])
      element.values[i] = attributes_[i].sample(rng);
  }
}

Element ScenarioSchema::canonical(const Element& element) const {
  Element out = element;
  for (std::size_t i = 0; i < out.values.size() && i < attributes_.size(); ++i)
    if (out.values[i]) out.values[i] = attributes_[i].snap(*out.values[i]);
  return out;
}

std::string ScenarioSchema::violation(const Element& element) const {
  if (element.values.size() != attributes_.size())
    return "element has " + std::to_string(element.values.size()) + " cells, schema has " +
           std::to_string(attributes_.size());
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    const auto& cell = element.values[i];
    const bool present = is_present(element, i);
    if (present && !cell) return "missing value for " + attributes_[i].name();
    if (!present && cell) return "unexpected value for " + attributes_[i].name();
    if (cell && !attributes_[i].contains(*cell))
      return "value " + format_value(*cell) + " outside the domain of " + attributes_[i].name();
  }
  return {};
}

std::string ScenarioSchema::violation(const TestCase& tc) const {
  if (tc.size() < min_elements_ || tc.size() > max_elements_)
    return "length " + std::to_string(tc.size()) + " outside [" + std::to_string(min_elements_) + ", " +
           std::to_string(max_elements_) + "]";
  for (std::size_t j = 0; j < tc.size(); ++j) {
    std::string why = violation(tc.elements[j]);
    if (!why.empty()) return "element " + std::to_string(j) + ": " + why;
  }
  return {};
}

void ScenarioSchema::check(const TestCase& tc) const {
  std::string why = violation(tc);
  if (!why.empty()) throw Error(ErrorCode::domain_violation, "schema '" + name_ + "': " + why);
}

void ScenarioSchema::check_arity(const TestCase& tc) const {
  for (const auto& e : tc.elements)
    if (e.values.size() != attributes_.size())
      throw Error(ErrorCode::schema_mismatch, "test case does not match schema '" + name_ + "'");
}

}  // namespace scengen
