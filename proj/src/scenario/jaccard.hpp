#pragma once

#include "scenario/schema.hpp"

namespace scengen {

/// 1 - |I| / |U| over the element multisets of the two test cases. Elements
/// match when all cells are equal after snapping to the attribute grid; an
/// empty cell only matches an empty cell. Two empty test cases are at
/// distance 0.
double jaccard_distance(const ScenarioSchema& schema, const TestCase& a, const TestCase& b);

}  // namespace scengen
