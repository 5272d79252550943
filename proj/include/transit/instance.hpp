#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "transit/graph.hpp"
#include "transit/rational.hpp"

namespace transit {

enum class Objective { kEgalitarian, kUtilitarian };

std::string_view to_string(Objective objective);
/// Accepts "eg"/"egalitarian" and "ut"/"utilitarian".
Objective parse_objective(std::string_view text);

/// Trip on the line, from s to t with s <= t.
struct PtpAgent {
  Rational s;
  Rational t;
  friend bool operator==(const PtpAgent&, const PtpAgent&) = default;
};

/// Trip between two graph vertices.
struct NtpAgent {
  VertexId s = 0;
  VertexId t = 0;
  friend bool operator==(const NtpAgent&, const NtpAgent&) = default;
};

/// Bus-stop placement on a line: candidate stops, agents, discount, budget.
class PtpInstance {
 public:
  /// Throws InvalidInstance unless stops are strictly increasing, every agent
  /// has s <= t, and 0 <= alpha < 1.
  PtpInstance(std::vector<Rational> stops, std::vector<PtpAgent> agents, Rational alpha,
              std::size_t beta);

  const std::vector<Rational>& stops() const { return stops_; }
  const std::vector<PtpAgent>& agents() const { return agents_; }
  const Rational& alpha() const { return alpha_; }
  std::size_t beta() const { return beta_; }

  friend bool operator==(const PtpInstance&, const PtpInstance&) = default;

 private:
  std::vector<Rational> stops_;
  std::vector<PtpAgent> agents_;
  Rational alpha_;
  std::size_t beta_;
};

/// Edge discounting in a connected weighted graph.
class NtpInstance {
 public:
  /// Throws InvalidInstance if the graph is disconnected, an agent terminal is
  /// not a vertex, or alpha lies outside [0, 1).
  NtpInstance(Graph graph, std::vector<NtpAgent> agents, Rational alpha, std::size_t beta);

  const Graph& graph() const { return graph_; }
  const std::vector<NtpAgent>& agents() const { return agents_; }
  const Rational& alpha() const { return alpha_; }
  std::size_t beta() const { return beta_; }

  /// Same instance with a different agent multiset.
  NtpInstance with_agents(std::vector<NtpAgent> agents) const;
  /// Same instance with a different budget.
  NtpInstance with_beta(std::size_t beta) const;

  friend bool operator==(const NtpInstance&, const NtpInstance&) = default;

 private:
  Graph graph_;
  std::vector<NtpAgent> agents_;
  Rational alpha_;
  std::size_t beta_;
};

/// A selection (stop indices for PTP, edge ids for NTP; sorted ascending)
/// together with its exact evaluation.
struct Solution {
  std::vector<std::size_t> selection;
  std::vector<Rational> per_agent_costs;
  Rational total;  // utilitarian cost
  Rational max;    // egalitarian cost
  Objective objective = Objective::kEgalitarian;
  bool feasible = true;

  /// The cost selected by `objective`.
  const Rational& cost() const { return objective == Objective::kEgalitarian ? max : total; }
};

}  // namespace transit
