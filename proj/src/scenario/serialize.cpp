#include "scenario/serialize.hpp"

#include <cmath>

#include "common/error.hpp"

namespace scengen {

namespace {

nlohmann::json cell_to_json(const AttributeSpec& spec, const Cell& cell) {
  if (!cell) return nullptr;
  if (auto label = spec.label_of(*cell)) return *label;
  double v = *cell;
  if (std::nearbyint(v) == v && std::abs(v) < 9.0e15) return static_cast<long long>(v);
  return v;
}

Cell cell_from_json(const AttributeSpec& spec, const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  if (j.is_string()) {
    auto v = spec.value_of(j.get<std::string>());
    if (!v) throw Error(ErrorCode::domain_violation, "unknown label '" + j.get<std::string>() + "' for " + spec.name());
    return *v;
  }
  if (j.is_number()) return j.get<double>();
  throw Error(ErrorCode::invalid_argument, "cell for " + spec.name() + " must be a number, label, or null");
}

}  // namespace

nlohmann::json test_case_to_json(const ScenarioSchema& schema, const TestCase& tc) {
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& e : tc.elements) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t i = 0; i < e.values.size(); ++i) row.push_back(cell_to_json(schema.attribute(i), e.values[i]));
    elements.push_back(std::move(row));
  }
  return {{"schema_name", schema.name()}, {"elements", std::move(elements)}};
}

TestCase test_case_from_json(const ScenarioSchema& schema, const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("elements"))
    throw Error(ErrorCode::invalid_argument, "test case document needs an 'elements' array");
  if (doc.contains("schema_name") && doc.at("schema_name").get<std::string>() != schema.name())
    throw Error(ErrorCode::schema_mismatch,
                "test case is for schema '" + doc.at("schema_name").get<std::string>() + "', expected '" +
                    schema.name() + "'");
  TestCase tc;
  for (const auto& row : doc.at("elements")) {
    if (!row.is_array() || row.size() != schema.arity())
      throw Error(ErrorCode::schema_mismatch, "element row does not match schema '" + schema.name() + "'");
    Element e;
    for (std::size_t i = 0; i < schema.arity(); ++i) e.values.push_back(cell_from_json(schema.attribute(i), row[i]));
    tc.elements.push_back(std::move(e));
  }
  schema.check(tc);
  return tc;
}

}  // namespace scengen
