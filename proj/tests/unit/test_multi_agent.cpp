#include <gtest/gtest.h>

#include "../support/generators.hpp"
#include "transit/errors.hpp"
#include "transit/evaluate.hpp"
#include "transit/multi_agent.hpp"
#include "transit/oracles.hpp"

namespace transit {
namespace {

Rational Q(const char* text) { return parse_rational(text); }

NtpInstance six_vertex(std::size_t beta = 2) {
  Graph g({"s", "v1", "v2", "v3", "v4", "t"}, {{"s", "v1", 1},
                                               {"s", "v2", 5},
                                               {"v1", "v2", 2},
                                               {"v1", "v3", 3},
                                               {"v2", "v4", 2},
                                               {"v2", "t", 7}});
  return NtpInstance(std::move(g), {{0, 5}}, Q("1/2"), beta);
}

BudgetMapping M(std::vector<Rational> v) { return BudgetMapping(std::move(v)); }

TEST(Merge, AddExamples) {
  const auto mu = M({10, Q("13/2"), Q("11/2")});
  EXPECT_EQ(merge_add(mu, mu, 2).mapping.values(), (std::vector<Rational>{20, Q("33/2"), 13}));
  EXPECT_EQ(merge_add(M({4, 1, 1}), M({3, 2, 0}), 2).mapping.values(),
            (std::vector<Rational>{7, 4, 3}));
  EXPECT_EQ(merge_add(mu, M({0, 0, 0}), 2).mapping, mu);
}

TEST(Merge, MaxExamples) {
  const auto mu = M({10, Q("13/2"), Q("11/2")});
  EXPECT_EQ(merge_max(mu, mu, 2).mapping.values(), (std::vector<Rational>{10, 10, Q("13/2")}));
  EXPECT_EQ(merge_max(M({4, 1, 1}), M({3, 2, 0}), 2).mapping.values(),
            (std::vector<Rational>{4, 3, 2}));
  EXPECT_EQ(merge_max(mu, M({0, 0, 0}), 2).mapping, mu);
}

TEST(Merge, SharesAreSmallestMinimizers) {
  auto r = merge_add(M({4, 1, 1}), M({3, 2, 0}), 2);
  EXPECT_EQ(r.first_share, (std::vector<std::size_t>{0, 1, 1}));
}

TEST(Merge, MismatchedBudgetsThrow) {
  EXPECT_THROW(merge_add(M({1, 0}), M({1, 0, 0}), 2), BudgetMismatch);
  EXPECT_THROW(merge_max(M({1, 0, 0}), M({1, 0, 0}), 1), BudgetMismatch);
}

TEST(Merge, AlgebraOnRandomMappings) {
  testing::Rng rng(21);
  auto random_mapping = [&](std::size_t beta) {
    std::vector<Rational> v(beta + 1);
    long current = static_cast<long>(testing::uniform(rng, 0, 30));
    for (auto& x : v) {
      x = current;
      current -= static_cast<long>(testing::uniform(rng, 0, std::min<long>(current, 8)));
    }
    return M(v);
  };
  for (int round = 0; round < 200; ++round) {
    const std::size_t beta = testing::uniform(rng, 0, 4);
    auto a = random_mapping(beta);
    auto b = random_mapping(beta);
    auto c = random_mapping(beta);
    const auto ab = merge_add(a, b, beta).mapping;
    EXPECT_EQ(ab, merge_add(b, a, beta).mapping);
    EXPECT_EQ(merge_add(ab, c, beta).mapping,
              merge_add(a, merge_add(b, c, beta).mapping, beta).mapping);
    EXPECT_EQ(merge_max(a, b, beta).mapping, merge_max(b, a, beta).mapping);
    for (std::size_t x = 0; x < beta; ++x) {
      EXPECT_LE(ab(x + 1), ab(x));
      EXPECT_LE(merge_max(a, b, beta).mapping(x + 1), merge_max(a, b, beta).mapping(x));
    }
  }
}

TEST(SolveOneAgent, SixVertex) {
  auto full = solve_one_agent(six_vertex());
  EXPECT_EQ(full.cost(), Q("11/2"));
  EXPECT_EQ(full.selection.size(), 2u);
  EXPECT_EQ(solve_one_agent(six_vertex(1)).cost(), Q("13/2"));
  EXPECT_EQ(solve_one_agent(six_vertex(0)).cost(), 10);
  EXPECT_EQ(solve_one_agent(six_vertex(), Objective::kUtilitarian).cost(), Q("11/2"));
  auto two = six_vertex().with_agents({{0, 5}, {0, 4}});
  EXPECT_THROW(solve_one_agent(two), AgentCount);
}

TEST(SolveTwoAgents, ZeroBudgetIsWalking) {
  auto inst = six_vertex(0).with_agents({{0, 5}, {1, 4}});
  auto eg = solve_two_agents(inst, Objective::kEgalitarian);
  auto ut = solve_two_agents(inst, Objective::kUtilitarian);
  EXPECT_EQ(eg.cost(), 10);
  EXPECT_EQ(ut.cost(), 14);
  EXPECT_TRUE(eg.selection.empty());
}

TEST(SolveTwoAgents, IdenticalAgents) {
  auto inst = six_vertex().with_agents({{0, 5}, {0, 5}});
  EXPECT_EQ(solve_two_agents(inst, Objective::kUtilitarian).cost(), 11);
  EXPECT_EQ(solve_two_agents(inst, Objective::kEgalitarian).cost(), Q("11/2"));
  EXPECT_THROW(solve_two_agents(six_vertex(), Objective::kEgalitarian), AgentCount);
}

TEST(SolveTwoAgents, MatchesOracleAndWitnessReevaluates) {
  testing::Rng rng(31);
  for (int round = 0; round < 60; ++round) {
    auto inst = testing::random_ntp(rng, 2, {0, Q("1/4"), Q("1/2")}, 3);
    for (auto objective : {Objective::kEgalitarian, Objective::kUtilitarian}) {
      auto result = solve_two_agents_detailed(inst, objective);
      const auto& s = result.solution;
      EXPECT_TRUE(s.feasible);
      EXPECT_EQ(objective_cost(inst, s.selection, objective), s.cost());
      EXPECT_EQ(s.cost(), oracle_ntp(inst, objective).optimum);
    }
  }
}

TEST(SolveTwoAgents, NoWorseThanAnyFixedSplit) {
  testing::Rng rng(32);
  for (int round = 0; round < 30; ++round) {
    auto inst = testing::random_ntp(rng, 2, {Q("1/2")}, 3);
    const auto& a = inst.agents();
    for (std::size_t split = 0; split <= inst.beta(); ++split) {
      auto first = solve_one_agent(inst.with_agents({a[0]}).with_beta(split));
      auto second = solve_one_agent(inst.with_agents({a[1]}).with_beta(inst.beta() - split));
      EXPECT_LE(solve_two_agents(inst, Objective::kUtilitarian).cost(), first.cost() + second.cost());
    }
  }
}

TEST(TrivialBaseline, EmptySelectionWithinInverseAlpha) {
  auto base = trivial_baseline(six_vertex(), Objective::kEgalitarian);
  EXPECT_TRUE(base.selection.empty());
  EXPECT_EQ(base.cost(), 10);
  PtpInstance ex1({0, 1, 2, 3, 4, 5, 6}, {{0, 6}, {Q("1/2"), Q("9/2")}, {1, Q("9/2")}, {1, 5}},
                  Q("1/2"), 2);
  auto ptp = trivial_baseline(ex1, Objective::kEgalitarian);
  EXPECT_EQ(ptp.cost(), 6);
  EXPECT_LE(ptp.cost(), 2 * Q("7/2"));
  testing::Rng rng(33);
  for (int round = 0; round < 40; ++round) {
    auto inst = testing::random_ntp(rng, 3, {Q("1/4"), Q("1/2")}, 3);
    for (auto objective : {Objective::kEgalitarian, Objective::kUtilitarian}) {
      const Rational opt = oracle_ntp(inst, objective).optimum;
      EXPECT_LE(trivial_baseline(inst, objective).cost(), opt / inst.alpha());
    }
  }
}

}  // namespace
}  // namespace transit
