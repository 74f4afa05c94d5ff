#pragma once

#include <optional>

#include "scenario/schema.hpp"

namespace scengen {

/// Objectives are stored negated so that every comparison minimizes.
struct Individual {
  TestCase genome;
  double f1 = 0.0;
  double f2 = 0.0;
  double violation = 0.0;
  std::optional<TestCase> parent;

  // scratch written by the survival step
  int rank = 0;
  double crowding = 0.0;

  double raw_f1() const { return f1 == 0.0 ? 0.0 : -f1; }
  double raw_f2() const { return f2 == 0.0 ? 0.0 : -f2; }
  bool feasible() const { return violation <= 0.0; }
};

inline double negated(double raw) { return raw == 0.0 ? 0.0 : -raw; }

}  // namespace scengen
