#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "common/random.hpp"
#include "evolution/config.hpp"
#include "evolution/individual.hpp"
#include "scenario/schema.hpp"

namespace scengen {

/// Binary tournament under constrained domination. Population must be non-empty.
const Individual& tournament_select(std::span<const Individual> population, SearchMode mode, Rng& rng);

/// Keeps the first `cut` elements of each parent and swaps the tails, so the
/// children have lengths (|p2|, |p1|). Requires 1 <= cut < min(|p1|, |p2|).
std::pair<TestCase, TestCase> one_point_crossover_at(const TestCase& p1, const TestCase& p2, std::size_t cut);

/// Cut drawn uniformly from [1, min(|p1|, |p2|) - 1]. Throws when a parent is
/// shorter than 2 elements.
std::pair<TestCase, TestCase> one_point_crossover(const TestCase& p1, const TestCase& p2, Rng& rng);

TestCase mutate_exchange_at(const TestCase& tc, std::size_t i, std::size_t j);
/// Swaps two distinct positions; identity for length 1.
TestCase mutate_exchange(const TestCase& tc, Rng& rng);

/// Resamples one present cell of one element. When the cell controls other
/// attributes' presence, the dependent cells are cleared or drawn to match.
TestCase mutate_change_variable(const TestCase& tc, const ScenarioSchema& schema, Rng& rng);

/// Shuffles a contiguous window of length >= 2; identity for length 1.
TestCase mutate_scramble(const TestCase& tc, Rng& rng);

/// Truncates the tail past max_elements.
void clip_to_schema(TestCase& tc, const ScenarioSchema& schema);

}  // namespace scengen
