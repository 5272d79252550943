#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "transit/instance.hpp"

namespace transit {

// Cost evaluation for both models. Selections are index lists: stop indices
// into PtpInstance::stops() or edge ids of the NTP graph. Order and
// duplicates in the input are ignored.

Rational walking_cost(const PtpInstance& instance, const PtpAgent& agent);
/// Shortest-path distance under the original weights. Throws InvalidAgent if a
/// terminal is not a vertex of the graph.
Rational walking_cost(const NtpInstance& instance, const NtpAgent& agent);

/// Cheapest of walking and riding between any two selected stops.
Rational ptp_agent_cost(const PtpInstance& instance, std::span<const std::size_t> selection,
                        const PtpAgent& agent);

/// Shortest path where selected edges cost alpha * w(e).
Rational ntp_agent_cost(const NtpInstance& instance, std::span<const std::size_t> selection,
                        const NtpAgent& agent);

/// Per-agent costs for every agent, sharing one shortest-path run per distinct source.
std::vector<Rational> ntp_agent_costs(const NtpInstance& instance,
                                      std::span<const std::size_t> selection);

Solution evaluate(const PtpInstance& instance, std::span<const std::size_t> selection,
                  Objective objective);
Solution evaluate(const NtpInstance& instance, std::span<const std::size_t> selection,
                  Objective objective);

/// Headline cost only.
Rational objective_cost(const PtpInstance& instance, std::span<const std::size_t> selection,
                        Objective objective);
Rational objective_cost(const NtpInstance& instance, std::span<const std::size_t> selection,
                        Objective objective);

/// Builds a Solution from already-computed per-agent costs.
Solution make_solution(std::vector<std::size_t> selection, std::vector<Rational> per_agent_costs,
                       Objective objective, std::size_t beta);

/// Outcome of the decision problem "is there a feasible selection with cost <= kappa".
struct Decision {
  bool yes = false;
  std::optional<std::vector<std::size_t>> witness;
};

/// Answered exactly through the exhaustive oracle, so it inherits its size cap.
Decision decision_check(const PtpInstance& instance, Objective objective, const Rational& kappa);
Decision decision_check(const NtpInstance& instance, Objective objective, const Rational& kappa);

}  // namespace transit
