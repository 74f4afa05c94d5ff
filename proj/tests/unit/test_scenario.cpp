#include <gtest/gtest.h>

#include <map>

#include "common/error.hpp"
#include "lkas/lkas.hpp"
#include "robot/robot.hpp"
#include "scenario/generate.hpp"
#include "scenario/jaccard.hpp"
#include "scenario/serialize.hpp"
#include "thermostat/thermostat.hpp"

using namespace scengen;

namespace {

ScenarioSchema small_schema(std::size_t min_len = 1, std::size_t max_len = 5) {
  return ScenarioSchema("small",
                        {AttributeSpec::categorical("kind", {"a", "b"}), AttributeSpec("level", Interval{0.0, 1.0, 0.25}),
                         AttributeSpec::integer_range("extra", 1, 3, 1, Presence{0, {1.0}})},
                        min_len, max_len);
}

Element el(std::vector<Cell> v) { return Element{std::move(v)}; }

}  // namespace

TEST(Schema, RejectsBadDefinitions) {
  EXPECT_THROW(ScenarioSchema("x", {}, 1, 2), Error);
  EXPECT_THROW(ScenarioSchema("x", {AttributeSpec::integer_range("a", 1, 2)}, 3, 2), Error);
  EXPECT_THROW(ScenarioSchema("x", {AttributeSpec::integer_range("a", 1, 2)}, 0, 2), Error);
  EXPECT_THROW(ScenarioSchema("x", {AttributeSpec::integer_range("a", 1, 2), AttributeSpec::integer_range("a", 1, 2)}, 1, 2),
               Error);
  EXPECT_THROW(AttributeSpec("bad", Interval{1.0, 0.0, 0.1}), Error);
  EXPECT_THROW(AttributeSpec("bad", DiscreteSet{{1.0, 1.0}, {}}), Error);
  // presence must refer to an earlier attribute
  EXPECT_THROW(ScenarioSchema("x", {AttributeSpec::integer_range("a", 1, 2, 1, Presence{1, {1.0}}),
                                     AttributeSpec::integer_range("b", 1, 2)},
                              1, 2),
               Error);
}

TEST(Schema, DomainMembershipAndSnapping) {
  const auto s = small_schema();
  const auto& level = s.attribute(1);
  EXPECT_TRUE(level.contains(0.75));
  EXPECT_FALSE(level.contains(0.8));
  EXPECT_FALSE(level.contains(1.25));
  EXPECT_DOUBLE_EQ(level.snap(0.8), 0.75);
  EXPECT_DOUBLE_EQ(level.snap(7.0), 1.0);
  EXPECT_EQ(level.cardinality(), 5u);
  EXPECT_EQ(s.attribute(0).label_of(1.0), "b");
  EXPECT_EQ(s.attribute(0).value_of("a"), 0.0);
}

TEST(Schema, PresenceRulesAndViolations) {
  const auto s = small_schema();
  TestCase ok{{el({0.0, 0.5, std::nullopt}), el({1.0, 0.25, 2.0})}};
  EXPECT_TRUE(s.valid(ok));

  TestCase missing{{el({1.0, 0.5, std::nullopt})}};
  EXPECT_NE(s.violation(missing).find("missing"), std::string::npos);
  TestCase unexpected{{el({0.0, 0.5, 2.0})}};
  EXPECT_NE(s.violation(unexpected).find("unexpected"), std::string::npos);
  TestCase outside{{el({0.0, 0.3, std::nullopt})}};
  EXPECT_NE(s.violation(outside).find("outside"), std::string::npos);
  TestCase too_long{std::vector<Element>(6, el({0.0, 0.5, std::nullopt}))};
  EXPECT_FALSE(s.valid(too_long));
  EXPECT_THROW(s.check(too_long), Error);

  TestCase wrong_arity{{el({0.0, 0.5})}};
  try {
    s.check_arity(wrong_arity);
    FAIL() << "expected schema_mismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::schema_mismatch);
  }
}

TEST(Schema, ConformFillsAndClears) {
  const auto s = small_schema();
  Rng rng(3);
  Element e = el({1.0, 0.5, std::nullopt});
  s.conform(e, rng);
  ASSERT_TRUE(e.values[2].has_value());
  e.values[0] = 0.0;
  s.conform(e, rng);
  EXPECT_FALSE(e.values[2].has_value());
}

TEST(Generate, RandomCasesAreValidAndDeterministic) {
  const auto s = small_schema(2, 7);
  Rng a(42), b(42);
  std::map<std::size_t, int> lengths;
  for (int i = 0; i < 2000; ++i) {
    const TestCase x = random_test_case(s, a);
    const TestCase y = random_test_case(s, b);
    ASSERT_EQ(x, y);
    ASSERT_TRUE(s.valid(x)) << s.violation(x);
    ++lengths[x.size()];
  }
  EXPECT_EQ(lengths.size(), 6u);  // every length 2..7 occurs
}

TEST(Generate, MarkovFrequenciesMatchTransitionMatrix) {
  const auto schema = lkas::make_schema();
  const auto chain = lkas::default_markov_chain();
  Rng rng(11);
  // transition counts from state i to j
  std::vector<std::vector<double>> counts(3, std::vector<double>(3, 0.0));
  std::vector<double> first(3, 0.0);
  for (int n = 0; n < 20000; ++n) {
    const TestCase tc = markov_test_case(schema, chain, rng);
    ASSERT_TRUE(schema.valid(tc)) << schema.violation(tc);
    first[static_cast<std::size_t>(*tc.elements[0].values[lkas::kType])] += 1.0;
    for (std::size_t k = 1; k < tc.size(); ++k) {
      const auto i = static_cast<std::size_t>(*tc.elements[k - 1].values[lkas::kType]);
      const auto j = static_cast<std::size_t>(*tc.elements[k].values[lkas::kType]);
      counts[i][j] += 1.0;
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(first[i] / 20000.0, chain.initial[i], 0.02);
    const double row = counts[i][0] + counts[i][1] + counts[i][2];
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(counts[i][j] / row, chain.transition[i][j], 0.01);
  }
}

TEST(Generate, MarkovChainValidation) {
  MarkovChain c = lkas::default_markov_chain();
  c.transition[0] = {0.5, 0.5, 0.5};
  EXPECT_THROW(c.validate(), Error);
  MarkovChain d = lkas::default_markov_chain();
  d.states = {0.0, 1.0, 7.0};
  Rng rng(1);
  EXPECT_THROW(markov_test_case(lkas::make_schema(), d, rng), Error);
}

TEST(Jaccard, BasicValues) {
  const auto s = small_schema();
  const Element a = el({0.0, 0.5, std::nullopt});
  const Element b = el({1.0, 0.25, 2.0});
  const Element c = el({0.0, 1.0, std::nullopt});
  EXPECT_DOUBLE_EQ(jaccard_distance(s, TestCase{{a, b}}, TestCase{{a, b}}), 0.0);
  EXPECT_DOUBLE_EQ(jaccard_distance(s, TestCase{{a}}, TestCase{{b}}), 1.0);
  // {a, b} vs {a, c}: intersection 1, union 3
  EXPECT_DOUBLE_EQ(jaccard_distance(s, TestCase{{a, b}}, TestCase{{a, c}}), 1.0 - 1.0 / 3.0);
  // multisets: {a, a} vs {a}: intersection 1, union 2
  EXPECT_DOUBLE_EQ(jaccard_distance(s, TestCase{{a, a}}, TestCase{{a}}), 0.5);
  EXPECT_DOUBLE_EQ(jaccard_distance(s, TestCase{}, TestCase{}), 0.0);
  // order does not matter
  EXPECT_DOUBLE_EQ(jaccard_distance(s, TestCase{{a, b}}, TestCase{{b, a}}), 0.0);
}

TEST(Jaccard, BoundedSymmetricOnRandomCases) {
  const auto s = thermostat::make_schema();
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const TestCase x = random_test_case(s, rng);
    const TestCase y = random_test_case(s, rng);
    const double d = jaccard_distance(s, x, y);
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, 1.0);
    EXPECT_DOUBLE_EQ(d, jaccard_distance(s, y, x));
    EXPECT_DOUBLE_EQ(jaccard_distance(s, x, x), 0.0);
  }
}

TEST(Serialize, RoundTripWithLabelsAndAbsentCells) {
  const auto s = lkas::make_schema();
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const TestCase tc = random_test_case(s, rng);
    const auto doc = test_case_to_json(s, tc);
    EXPECT_EQ(doc.at("schema_name"), "lkas");
    EXPECT_EQ(test_case_from_json(s, nlohmann::json::parse(doc.dump())), tc);
  }
  const auto doc = test_case_to_json(s, TestCase{{el({0.0, 12.0, std::nullopt}), el({1.0, std::nullopt, 30.0})}});
  EXPECT_EQ(doc.at("elements")[0][0], "straight");
  EXPECT_TRUE(doc.at("elements")[0][2].is_null());
}

TEST(Serialize, RejectsForeignOrInvalidDocuments) {
  const auto s = lkas::make_schema();
  nlohmann::json wrong_schema = {{"schema_name", "robot"}, {"elements", nlohmann::json::array()}};
  EXPECT_THROW(test_case_from_json(s, wrong_schema), Error);
  nlohmann::json bad_value = {{"schema_name", "lkas"},
                              {"elements", {{"straight", 3, nullptr}, {"turn_left", nullptr, 30}}}};
  EXPECT_THROW(test_case_from_json(s, bad_value), Error);
}
