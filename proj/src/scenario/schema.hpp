#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "common/random.hpp"

namespace scengen {

/// One cell of the scenario matrix. An empty optional is an absent cell.
using Cell = std::optional<double>;

struct Element {
  std::vector<Cell> values;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

struct TestCase {
  std::vector<Element> elements;

  std::size_t size() const { return elements.size(); }
  bool empty() const { return elements.empty(); }

  friend bool operator==(const TestCase&, const TestCase&) = default;
};

/// Finite set of realizations. Categorical sets carry one label per value;
/// the value itself is the label's index.
struct DiscreteSet {
  std::vector<double> values;
  std::vector<std::string> labels;
};

/// Closed interval sampled on a regular grid min + k * step.
struct Interval {
  double min = 0.0;
  double max = 0.0;
  double step = 1.0;
};

/// The attribute only exists when the controlling attribute (an earlier one
/// in the schema) holds one of `when`. Otherwise its cell stays empty.
struct Presence {
  std::size_t controller = 0;
  std::vector<double> when;
};

class AttributeSpec {
 public:
  AttributeSpec(std::string name, DiscreteSet set, std::optional<Presence> presence = std::nullopt);
  AttributeSpec(std::string name, Interval interval, std::optional<Presence> presence = std::nullopt);

  /// Integer set {first, first + step, ..., last}.
  static AttributeSpec integer_range(std::string name, int first, int last, int step = 1,
                                     std::optional<Presence> presence = std::nullopt);
  static AttributeSpec categorical(std::string name, std::vector<std::string> labels);

  const std::string& name() const { return name_; }
  const std::optional<Presence>& presence() const { return presence_; }
  bool is_categorical() const;
  bool is_interval() const { return std::holds_alternative<Interval>(domain_); }
  const std::variant<DiscreteSet, Interval>& domain() const { return domain_; }

  bool contains(double value) const;
  double sample(Rng& rng) const;
  /// Interval values are moved to the nearest grid point; set values are
  /// returned unchanged.
  double snap(double value) const;
  std::size_t cardinality() const;

  std::optional<std::string> label_of(double value) const;
  std::optional<double> value_of(std::string_view label) const;

 private:
  std::string name_;
  std::variant<DiscreteSet, Interval> domain_;
  std::optional<Presence> presence_;
};

class ScenarioSchema {
 public:
  ScenarioSchema(std::string name, std::vector<AttributeSpec> attributes, std::size_t min_elements,
                 std::size_t max_elements);

  const std::string& name() const { return name_; }
  const std::vector<AttributeSpec>& attributes() const { return attributes_; }
  const AttributeSpec& attribute(std::size_t i) const { return attributes_.at(i); }
  std::size_t arity() const { return attributes_.size(); }
  std::size_t min_elements() const { return min_elements_; }
  std::size_t max_elements() const { return max_elements_; }
  std::optional<std::size_t> index_of(std::string_view attribute) const;

  /// Whether attribute `i` must hold a value in `element`, given its controller.
  bool is_present(const Element& element, std::size_t i) const;

  /// Clears cells whose presence rule is off and samples missing cells whose
  /// rule is on. Attributes are visited in order, so controllers settle first.
  void conform(Element& element, Rng& rng) const;

  /// Snaps interval cells to their grid.
  Element canonical(const Element& element) const;

  /// Empty string when valid, otherwise the first violation found.
  std::string violation(const Element& element) const;
  std::string violation(const TestCase& tc) const;
  bool valid(const TestCase& tc) const { return violation(tc).empty(); }

  /// Throws Error(domain_violation) describing the first problem.
  void check(const TestCase& tc) const;
  /// Throws Error(schema_mismatch) when element arity differs from the schema.
  void check_arity(const TestCase& tc) const;

 private:
  std::string name_;
  std::vector<AttributeSpec> attributes_;
  std::size_t min_elements_;
  std::size_t max_elements_;
};

}  // namespace scengen
