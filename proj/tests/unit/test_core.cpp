#include <gtest/gtest.h>

#include "../support/generators.hpp"
#include "transit/errors.hpp"
#include "transit/evaluate.hpp"

namespace transit {
namespace {

Rational Q(const char* text) { return parse_rational(text); }

PtpInstance four_riders() {
  return PtpInstance({0, 1, 2, 3, 4, 5, 6}, {{0, 6}, {Q("1/2"), Q("9/2")}, {1, Q("9/2")}, {1, 5}},
                     Q("1/2"), 2);
}

NtpInstance six_vertex() {
  Graph g({"s", "v1", "v2", "v3", "v4", "t"}, {{"s", "v1", 1},
                                               {"s", "v2", 5},
                                               {"v1", "v2", 2},
                                               {"v1", "v3", 3},
                                               {"v2", "v4", 2},
                                               {"v2", "t", 7}});
  const auto s = g.vertex("s");
  const auto t = g.vertex("t");
  return NtpInstance(std::move(g), {{s, t}}, Q("1/2"), 2);
}

NtpInstance unit_path(const Rational& alpha) {
  Graph g({"s", "a", "b", "t"}, {{"s", "a", 1}, {"a", "b", 1}, {"b", "t", 1}});
  return NtpInstance(std::move(g), {{0, 3}}, alpha, 1);
}

TEST(Rational, ParsesFractionsIntegersAndDecimalsExactly) {
  EXPECT_EQ(Q("3/6"), Rational(1, 2));
  EXPECT_EQ(Q("-4"), Rational(-4));
  EXPECT_EQ(Q("0.1"), Rational(1, 10));
  EXPECT_EQ(Q("2.25"), Rational(9, 4));
  EXPECT_EQ(to_string(Q("0.1") + Q("0.2")), "3/10");
  EXPECT_EQ(to_string(Rational(7)), "7");
  EXPECT_THROW(Q("1/0"), std::invalid_argument);
  EXPECT_THROW(Q("abc"), std::invalid_argument);
  EXPECT_THROW(Q(""), std::invalid_argument);
}

TEST(Cost, InfinityOrderingAndArithmetic) {
  const Cost inf = Cost::infinity();
  EXPECT_LT(Cost(1000000), inf);
  EXPECT_EQ(inf + Cost(3), inf);
  EXPECT_EQ(inf * Cost(0), Cost(0));
  EXPECT_EQ(Cost(Q("1/2")) * Cost(4), Cost(2));
  EXPECT_EQ(to_string(inf), "inf");
  EXPECT_EQ(parse_cost("inf"), inf);
  EXPECT_THROW(inf.value(), std::logic_error);
}

TEST(Graph, CanonicalEdgeOrderAndValidation) {
  Graph g({"a", "b", "c"}, {{"c", "a", 2}, {"b", "a", 1}});
  ASSERT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edge(0).u, 0u);
  EXPECT_EQ(g.edge(0).v, 1u);
  EXPECT_EQ(g.edge(1).v, 2u);
  EXPECT_THROW(Graph({"a", "a"}, {}), InvalidInstance);
  EXPECT_THROW(Graph({"a", "b"}, {{"a", "a", 1}}), InvalidInstance);
  EXPECT_THROW(Graph({"a", "b"}, {{"a", "b", 1}, {"b", "a", 2}}), InvalidInstance);
  EXPECT_THROW(Graph({"a", "b"}, {{"a", "b", -1}}), InvalidInstance);
  EXPECT_THROW(Graph({"a", "b"}, {{"a", "x", 1}}), InvalidInstance);
}

TEST(Instance, RejectsInvalidFields) {
  try {
    PtpInstance({0, 1}, {}, 1, 1);
    FAIL() << "alpha = 1 accepted";
  } catch (const InvalidInstance& e) {
    EXPECT_EQ(e.field(), "alpha");
    EXPECT_NE(std::string(e.what()).find("alpha must lie in [0,1)"), std::string::npos);
  }
  EXPECT_THROW(PtpInstance({1, 0}, {}, 0, 1), InvalidInstance);
  EXPECT_THROW(PtpInstance({0, 0}, {}, 0, 1), InvalidInstance);
  EXPECT_THROW(PtpInstance({0, 1}, {{2, 1}}, 0, 1), InvalidInstance);
  Graph split({"a", "b", "c"}, {{"a", "b", 1}});
  EXPECT_THROW(NtpInstance(split, {}, 0, 1), InvalidInstance);
  Graph pair({"a", "b"}, {{"a", "b", 1}});
  EXPECT_THROW(NtpInstance(pair, {{0, 5}}, 0, 1), InvalidInstance);
  EXPECT_THROW(NtpInstance(pair, {}, Q("-1/2"), 1), InvalidInstance);
}

TEST(WalkingCost, PtpExampleAgents) {
  const auto inst = four_riders();
  std::vector<Rational> expected = {6, 4, Q("7/2"), 4};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(walking_cost(inst, inst.agents()[i]), expected[i]);
  }
  EXPECT_EQ(walking_cost(inst, PtpAgent{3, 3}), 0);
}

TEST(WalkingCost, NtpTableGraph) {
  const auto inst = six_vertex();
  EXPECT_EQ(walking_cost(inst, inst.agents()[0]), 10);
  EXPECT_EQ(walking_cost(inst, NtpAgent{2, 2}), 0);
  EXPECT_THROW(walking_cost(inst, NtpAgent{0, 17}), InvalidAgent);
}

TEST(PtpAgentCost, PaperValues) {
  const auto inst = four_riders();
  const std::vector<std::size_t> s1 = {1, 5};
  EXPECT_EQ(ptp_agent_cost(inst, s1, inst.agents()[2]), Q("5/2"));
  EXPECT_EQ(ptp_agent_cost(inst, {}, inst.agents()[0]), 6);
  PtpInstance ex3({0, 1, Q("3/2"), 2}, {{0, 1}, {0, 2}}, 0, 2);
  const std::vector<std::size_t> sel = {0, 2};
  EXPECT_EQ(ptp_agent_cost(ex3, sel, ex3.agents()[1]), Q("1/2"));
}

TEST(NtpAgentCost, TableGraphAndUnitPath) {
  const auto inst = six_vertex();
  const auto& g = inst.graph();
  std::vector<std::size_t> sel = {*g.find_edge(g.vertex("v1"), g.vertex("v2")),
                                  *g.find_edge(g.vertex("v2"), g.vertex("t"))};
  EXPECT_EQ(ntp_agent_cost(inst, sel, inst.agents()[0]), Q("11/2"));
  EXPECT_EQ(ntp_agent_cost(inst, {}, inst.agents()[0]), 10);
  const auto path = unit_path(0);
  const std::vector<std::size_t> first = {0};
  EXPECT_EQ(ntp_agent_cost(path, first, path.agents()[0]), 2);
}

TEST(Evaluate, FourRidersSelections) {
  const auto inst = four_riders();
  const std::vector<std::size_t> s1 = {5, 1};
  auto a = evaluate(inst, s1, Objective::kEgalitarian);
  EXPECT_EQ(a.selection, (std::vector<std::size_t>{1, 5}));
  EXPECT_EQ(a.per_agent_costs, (std::vector<Rational>{4, 3, Q("5/2"), 2}));
  EXPECT_EQ(a.max, 4);
  EXPECT_EQ(a.total, Q("23/2"));
  EXPECT_TRUE(a.feasible);
  const std::vector<std::size_t> s2 = {0, 5};
  auto b = evaluate(inst, s2, Objective::kUtilitarian);
  EXPECT_EQ(b.cost(), 14);
  EXPECT_EQ(b.max, Q("7/2"));
  auto c = evaluate(inst, {}, Objective::kUtilitarian);
  EXPECT_EQ(c.max, 6);
  EXPECT_EQ(c.total, Q("35/2"));
  const std::vector<std::size_t> three = {0, 1, 2};
  EXPECT_FALSE(evaluate(inst, three, Objective::kEgalitarian).feasible);
  const std::vector<std::size_t> bad = {9};
  EXPECT_THROW(evaluate(inst, bad, Objective::kEgalitarian), InvalidInstance);
}

TEST(DecisionCheck, FourRiders) {
  const auto inst = four_riders();
  auto eg = decision_check(inst, Objective::kEgalitarian, Q("7/2"));
  ASSERT_TRUE(eg.yes);
  EXPECT_EQ(*eg.witness, (std::vector<std::size_t>{0, 5}));
  EXPECT_FALSE(decision_check(inst, Objective::kEgalitarian, 0).yes);
  auto ut = decision_check(inst, Objective::kUtilitarian, Q("23/2"));
  ASSERT_TRUE(ut.yes);
  // {1,4} and {1,5} tie; the smallest is reported.
  EXPECT_EQ(*ut.witness, (std::vector<std::size_t>{1, 4}));
  EXPECT_EQ(objective_cost(inst, std::vector<std::size_t>{1, 5}, Objective::kUtilitarian), Q("23/2"));
}

// Bounds and monotonicity on random selections of random instances.
TEST(CoreProperties, BoundsAndMonotonicityNtp) {
  testing::Rng rng(11);
  for (int round = 0; round < 60; ++round) {
    auto inst = testing::random_ntp(rng, 3, {0, Q("1/4"), Q("1/2")}, 3);
    std::vector<std::size_t> sel;
    for (EdgeId e = 0; e < inst.graph().edge_count(); ++e) {
      if (testing::uniform(rng, 0, 2) == 0) sel.push_back(e);
    }
    auto small = evaluate(inst, sel, Objective::kUtilitarian);
    for (std::size_t i = 0; i < inst.agents().size(); ++i) {
      const Rational walk = walking_cost(inst, inst.agents()[i]);
      EXPECT_LE(small.per_agent_costs[i], walk);
      EXPECT_GE(small.per_agent_costs[i], inst.alpha() * walk);
    }
    auto bigger = sel;
    bigger.push_back(testing::uniform(rng, 0, inst.graph().edge_count() - 1));
    auto large = evaluate(inst, bigger, Objective::kUtilitarian);
    EXPECT_LE(large.total, small.total);
    EXPECT_LE(large.max, small.max);
    EXPECT_LE(small.max, small.total);
    EXPECT_LE(small.total, small.max * static_cast<long>(inst.agents().size()));
    EXPECT_EQ(evaluate(inst, sel, Objective::kUtilitarian).total, small.total);
  }
}

TEST(CoreProperties, BoundsAndMonotonicityPtp) {
  testing::Rng rng(12);
  for (int round = 0; round < 80; ++round) {
    auto inst = testing::random_ptp(rng, 8, 5, 4, {0, Q("1/2"), Q("3/4")});
    std::vector<std::size_t> sel;
    for (std::size_t i = 0; i < inst.stops().size(); ++i) {
      if (testing::uniform(rng, 0, 1) == 0) sel.push_back(i);
    }
    auto small = evaluate(inst, sel, Objective::kEgalitarian);
    for (std::size_t i = 0; i < inst.agents().size(); ++i) {
      const Rational walk = walking_cost(inst, inst.agents()[i]);
      EXPECT_LE(small.per_agent_costs[i], walk);
      EXPECT_GE(small.per_agent_costs[i], inst.alpha() * walk);
    }
    auto bigger = sel;
    bigger.push_back(testing::uniform(rng, 0, inst.stops().size() - 1));
    auto large = evaluate(inst, bigger, Objective::kEgalitarian);
    EXPECT_LE(large.max, small.max);
    EXPECT_LE(large.total, small.total);
  }
}

TEST(Objective, ParseAndPrint) {
  EXPECT_EQ(parse_objective("eg"), Objective::kEgalitarian);
  EXPECT_EQ(parse_objective("utilitarian"), Objective::kUtilitarian);
  EXPECT_EQ(to_string(Objective::kUtilitarian), "ut");
  EXPECT_THROW(parse_objective("max"), std::invalid_argument);
}

}  // namespace
}  // namespace transit
