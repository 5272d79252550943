#pragma once

#include <cstddef>
#include <vector>

#include "transit/instance.hpp"

namespace transit {

struct GreedyResult {
  Solution solution;
  /// Headline cost after each step, starting with the initial selection.
  std::vector<Rational> trajectory;
  /// Set by greedy_down when beta exceeds the edge count and E was returned as is.
  bool clamped = false;
};

/// Bottom-up greedy: from the empty set, add beta times the edge whose
/// addition gives the lowest cost. Ties go to the smallest edge id, i.e. the
/// lexicographically smallest endpoint pair.
GreedyResult greedy_up(const NtpInstance& instance, Objective objective);

/// Top-down greedy: from all edges, repeatedly remove the edge whose removal
/// gives the lowest cost until beta remain. Same tie-break.
GreedyResult greedy_down(const NtpInstance& instance, Objective objective);

/// Parameters of the motorway family on which both greedy algorithms end up
/// no better than investing nothing.
struct AdversarialParams {
  Rational alpha;
  std::size_t beta = 1;
  /// Strictly increasing, 0 < eps_0, each below min{1, 1/alpha - 1} (below 1
  /// when alpha = 0). Size beta + 1.
  std::vector<Rational> epsilons;
};

/// eps_i = (i + 1) * c / (beta + 2), c = min{1, 1/alpha - 1} / 2 (c = 1/2 for alpha = 0).
AdversarialParams canonical_adversarial_params(const Rational& alpha, std::size_t beta);

struct AdversarialInstance {
  NtpInstance instance;
  /// The heavy first edge of every direct route except agent 0's.
  std::vector<EdgeId> greedy_reference;
  /// beta motorway edges q-q1, q1-q2, ..., q_{beta-1}-q_beta.
  std::vector<EdgeId> motorway_reference;
};

/// Builds the instance. Agents i = 0..beta travel s_i -> t_i; each has a
/// direct route s_i, v_i^1, ..., v_i^beta, t_i whose first edge weighs
/// 1 + eps_i, and hub edges s_i-q, t_i-q' onto the motorway q, q_1, ...,
/// q_beta, q'. All other weights are 1. Throws InvalidInstance when the
/// epsilons violate their bounds.
AdversarialInstance make_adversarial(const AdversarialParams& params);

}  // namespace transit
