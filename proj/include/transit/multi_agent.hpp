#pragma once

#include <cstddef>
#include <vector>

#include "transit/budget_dijkstra.hpp"
#include "transit/instance.hpp"

namespace transit {

/// A merged mapping plus, for every budget b, the share handed to the first
/// operand (the smallest one achieving the minimum).
struct MergedMapping {
  BudgetMapping mapping;
  std::vector<std::size_t> first_share;
};

/// result(b) = min_{b' <= b} mu1(b') + mu2(b - b'). Throws BudgetMismatch unless
/// both operands are defined on exactly [0, beta].
MergedMapping merge_add(const BudgetMapping& mu1, const BudgetMapping& mu2, std::size_t beta);

/// result(b) = min_{b' <= b} max(mu1(b'), mu2(b - b')).
MergedMapping merge_max(const BudgetMapping& mu1, const BudgetMapping& mu2, std::size_t beta);

/// Exact single-agent optimum: mu_st(beta) and the reconstructed discount set.
/// Throws AgentCount unless the instance has exactly one agent.
Solution solve_one_agent(const NtpInstance& instance, Objective objective = Objective::kEgalitarian);

/// Shape of the route pair that produced a two-agent optimum.
struct BranchDecomposition {
  bool disjoint = true;
  VertexId p = 0;
  VertexId q = 0;
  /// 0: agent 1 runs p->q, agent 2 runs p->q. 1: agent 2 runs q->p.
  /// 2, 3: the same with agent 1 reversed.
  int order = 0;
  Rational value;  // merged mapping evaluated at beta
};

struct TwoAgentResult {
  Solution solution;
  BranchDecomposition decomposition;
};

/// Exact two-agent optimum by minimizing over the disjoint case and every
/// branch pair (p, q) with its traversal orders. Throws AgentCount unless the
/// instance has exactly two agents.
TwoAgentResult solve_two_agents_detailed(const NtpInstance& instance, Objective objective);
inline Solution solve_two_agents(const NtpInstance& instance, Objective objective) {
  return solve_two_agents_detailed(instance, objective).solution;
}

/// The empty selection: within a factor 1/alpha of optimal when alpha > 0.
Solution trivial_baseline(const NtpInstance& instance, Objective objective);
Solution trivial_baseline(const PtpInstance& instance, Objective objective);

}  // namespace transit
