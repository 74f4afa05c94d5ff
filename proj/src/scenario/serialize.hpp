#pragma once

#include <json.hpp>

#include "scenario/schema.hpp"

namespace scengen {

/// {"schema_name": ..., "elements": [[v, v, null], ...]}. Categorical cells
/// are written as their label, absent cells as null.
nlohmann::json test_case_to_json(const ScenarioSchema& schema, const TestCase& tc);

/// Inverse of test_case_to_json. Accepts labels or numeric codes for
/// categorical cells and validates the result against the schema.
TestCase test_case_from_json(const ScenarioSchema& schema, const nlohmann::json& doc);

}  // namespace scengen
