#include "transit/evaluate.hpp"

#include <algorithm>
#include <map>

#include "transit/errors.hpp"
#include "transit/oracles.hpp"

namespace transit {

namespace {

Rational abs_diff(const Rational& a, const Rational& b) { return a < b ? Rational(b - a) : Rational(a - b); }

std::vector<std::size_t> normalized(std::span<const std::size_t> selection, std::size_t bound,
                                    const char* what) {
  std::vector<std::size_t> out(selection.begin(), selection.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && out.back() >= bound) {
    throw InvalidInstance("selection", std::string(what) + " index " + std::to_string(out.back()) +
                                           " out of range");
  }
  return out;
}

std::vector<Cost> discounted_weights(const NtpInstance& instance,
                                     std::span<const std::size_t> selection) {
  const auto& g = instance.graph();
  std::vector<Cost> costs;
  costs.reserve(g.edge_count());
  for (const auto& e : g.edges()) costs.emplace_back(e.weight);
  for (std::size_t e : selection) costs[e] = Cost(Rational(instance.alpha() * g.edge(e).weight));
  return costs;
}

void check_agent(const NtpInstance& instance, const NtpAgent& agent) {
  if (!instance.graph().contains(agent.s) || !instance.graph().contains(agent.t)) {
    throw InvalidAgent("agent terminal is not a vertex of the graph");
  }
}

}  // namespace

Rational walking_cost(const PtpInstance&, const PtpAgent& agent) { return agent.t - agent.s; }

Rational walking_cost(const NtpInstance& instance, const NtpAgent& agent) {
  return ntp_agent_cost(instance, {}, agent);
}

Rational ptp_agent_cost(const PtpInstance& instance, std::span<const std::size_t> selection,
                        const PtpAgent& agent) {
  const auto chosen = normalized(selection, instance.stops().size(), "stop");
  Rational best = walking_cost(instance, agent);
  if (chosen.size() < 2) return best;
  const auto& stops = instance.stops();
  for (std::size_t board : chosen) {
    Rational walk_in = abs_diff(agent.s, stops[board]);
    for (std::size_t alight : chosen) {
      Rational c = walk_in + instance.alpha() * abs_diff(stops[alight], stops[board]) +
                   abs_diff(agent.t, stops[alight]);
      if (c < best) best = c;
    }
  }
  return best;
}

Rational ntp_agent_cost(const NtpInstance& instance, std::span<const std::size_t> selection,
                        const NtpAgent& agent) {
  check_agent(instance, agent);
  const auto chosen = normalized(selection, instance.graph().edge_count(), "edge");
  const auto weights = discounted_weights(instance, chosen);
  const auto dist = shortest_distances(instance.graph(), agent.s, weights);
  return dist[agent.t].value();
}

std::vector<Rational> ntp_agent_costs(const NtpInstance& instance,
                                      std::span<const std::size_t> selection) {
  const auto chosen = normalized(selection, instance.graph().edge_count(), "edge");
  const auto weights = discounted_weights(instance, chosen);
  std::map<VertexId, std::vector<Cost>> by_source;
  std::vector<Rational> out;
  out.reserve(instance.agents().size());
  for (const auto& agent : instance.agents()) {
    check_agent(instance, agent);
    auto it = by_source.find(agent.s);
    if (it == by_source.end()) {
      it = by_source.emplace(agent.s, shortest_distances(instance.graph(), agent.s, weights)).first;
    }
    out.push_back(it->second[agent.t].value());
  }
  return out;
}

Solution make_solution(std::vector<std::size_t> selection, std::vector<Rational> per_agent_costs,
                       Objective objective, std::size_t beta) {
  Solution s;
  s.selection = std::move(selection);
  s.per_agent_costs = std::move(per_agent_costs);
  s.total = 0;
  s.max = 0;
  for (const auto& c : s.per_agent_costs) {
    s.total += c;
    if (c > s.max) s.max = c;
  }
  s.objective = objective;
  s.feasible = s.selection.size() <= beta;
  return s;
}

Solution evaluate(const PtpInstance& instance, std::span<const std::size_t> selection,
                  Objective objective) {
  auto chosen = normalized(selection, instance.stops().size(), "stop");
  std::vector<Rational> costs;
  costs.reserve(instance.agents().size());
  for (const auto& a : instance.agents()) costs.push_back(ptp_agent_cost(instance, chosen, a));
  return make_solution(std::move(chosen), std::move(costs), objective, instance.beta());
}

Solution evaluate(const NtpInstance& instance, std::span<const std::size_t> selection,
                  Objective objective) {
  auto chosen = normalized(selection, instance.graph().edge_count(), "edge");
  auto costs = ntp_agent_costs(instance, chosen);
  return make_solution(std::move(chosen), std::move(costs), objective, instance.beta());
}

Rational objective_cost(const PtpInstance& instance, std::span<const std::size_t> selection,
                        Objective objective) {
  return evaluate(instance, selection, objective).cost();
}

Rational objective_cost(const NtpInstance& instance, std::span<const std::size_t> selection,
                        Objective objective) {
  return evaluate(instance, selection, objective).cost();
}

namespace {

template <class Instance>
Decision decide(const Instance& instance, Objective objective, const Rational& kappa) {
  const auto report = oracle(instance, objective, 1);
  Decision d;
  if (report.optimum <= kappa) {
    d.yes = true;
    d.witness = report.witnesses.front();
  }
  return d;
}

}  // namespace

Decision decision_check(const PtpInstance& instance, Objective objective, const Rational& kappa) {
  return decide(instance, objective, kappa);
}

Decision decision_check(const NtpInstance& instance, Objective objective, const Rational& kappa) {
  return decide(instance, objective, kappa);
}

}  // namespace transit
