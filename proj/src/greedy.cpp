#include "transit/greedy.hpp"

#include <algorithm>
#include <optional>

#include "transit/errors.hpp"
#include "transit/evaluate.hpp"

namespace transit {

GreedyResult greedy_up(const NtpInstance& instance, Objective objective) {
  const std::size_t edges = instance.graph().edge_count();
  const std::size_t steps = std::min(instance.beta(), edges);
  GreedyResult out;
  std::vector<std::size_t> selected;
  std::vector<bool> in(edges, false);
  out.trajectory.push_back(objective_cost(instance, selected, objective));
  for (std::size_t step = 0; step < steps; ++step) {
    std::optional<std::pair<Rational, EdgeId>> best;
    for (EdgeId e = 0; e < edges; ++e) {
      if (in[e]) continue;
      auto trial = selected;
      trial.push_back(e);
      Rational c = objective_cost(instance, trial, objective);
      if (!best || c < best->first) best.emplace(std::move(c), e);
    }
    in[best->second] = true;
    selected.push_back(best->second);
    out.trajectory.push_back(best->first);
  }
  std::sort(selected.begin(), selected.end());
  out.solution = evaluate(instance, selected, objective);
  return out;
}

GreedyResult greedy_down(const NtpInstance& instance, Objective objective) {
  const std::size_t edges = instance.graph().edge_count();
  GreedyResult out;
  std::vector<std::size_t> selected(edges);
  for (std::size_t e = 0; e < edges; ++e) selected[e] = e;
  out.clamped = instance.beta() > edges;
  out.trajectory.push_back(objective_cost(instance, selected, objective));
  while (selected.size() > instance.beta()) {
    std::optional<std::pair<Rational, std::size_t>> best;  // cost, position in `selected`
    for (std::size_t i = 0; i < selected.size(); ++i) {
      auto trial = selected;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      Rational c = objective_cost(instance, trial, objective);
      if (!best || c < best->first) best.emplace(std::move(c), i);
    }
    selected.erase(selected.begin() + static_cast<std::ptrdiff_t>(best->second));
    out.trajectory.push_back(best->first);
  }
  out.solution = evaluate(instance, selected, objective);
  return out;
}

AdversarialParams canonical_adversarial_params(const Rational& alpha, std::size_t beta) {
  Rational c = 1;
  if (alpha > 0) {
    Rational inverse_gap = Rational(1 / alpha) - 1;
    if (inverse_gap < c) c = inverse_gap;
  }
  c /= 2;
  AdversarialParams params{alpha, beta, {}};
  for (std::size_t i = 0; i <= beta; ++i) {
    params.epsilons.emplace_back(Rational(static_cast<long>(i + 1)) * c /
                                 Rational(static_cast<long>(beta + 2)));
  }
  return params;
}

namespace {

void check_params(const AdversarialParams& p) {
  if (p.alpha < 0 || p.alpha >= 1) throw InvalidInstance("alpha", "alpha must lie in [0,1)");
  if (p.beta < 1) throw InvalidInstance("beta", "beta must be positive");
  if (p.epsilons.size() != p.beta + 1) {
    throw InvalidInstance("epsilons", "need beta + 1 values");
  }
  Rational bound = 1;
  if (p.alpha > 0) {
    Rational inverse_gap = Rational(1 / p.alpha) - 1;
    if (inverse_gap < bound) bound = inverse_gap;
  }
  for (std::size_t i = 0; i < p.epsilons.size(); ++i) {
    const std::string field = "epsilons[" + std::to_string(i) + "]";
    if (i == 0 && p.epsilons[0] <= 0) throw InvalidInstance(field, "must be positive");
    if (i > 0 && p.epsilons[i] <= p.epsilons[i - 1]) {
      throw InvalidInstance(field, "must be strictly increasing");
    }
    if (p.epsilons[i] >= bound) {
      throw InvalidInstance(field, "must be below " + to_string(bound));
    }
  }
}

}  // namespace

AdversarialInstance make_adversarial(const AdversarialParams& params) {
  check_params(params);
  const std::size_t beta = params.beta;
  auto idx = [](std::size_t i) { return std::to_string(i); };

  // Vertex order keeps each agent's heavy edge lexicographically first among
  // its incident edges: s_i, v_i^1..v_i^beta, t_i per agent, then the hubs.
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= beta; ++i) {
    names.push_back("s" + idx(i));
    for (std::size_t j = 1; j <= beta; ++j) names.push_back("v" + idx(i) + "_" + idx(j));
    names.push_back("t" + idx(i));
  }
  names.push_back("q");
  for (std::size_t j = 1; j <= beta; ++j) names.push_back("q" + idx(j));
  names.push_back("q'");

  std::vector<NamedEdge> edges;
  for (std::size_t i = 0; i <= beta; ++i) {
    const std::string s = "s" + idx(i);
    const std::string t = "t" + idx(i);
    edges.push_back({s, "v" + idx(i) + "_1", Rational(1) + params.epsilons[i]});
    for (std::size_t j = 1; j < beta; ++j) {
      edges.push_back({"v" + idx(i) + "_" + idx(j), "v" + idx(i) + "_" + idx(j + 1), 1});
    }
    edges.push_back({"v" + idx(i) + "_" + idx(beta), t, 1});
    edges.push_back({s, "q", 1});
    edges.push_back({t, "q'", 1});
  }
  edges.push_back({"q", "q1", 1});
  for (std::size_t j = 1; j < beta; ++j) edges.push_back({"q" + idx(j), "q" + idx(j + 1), 1});
  edges.push_back({"q" + idx(beta), "q'", 1});

  Graph graph(names, edges);
  std::vector<NtpAgent> agents;
  for (std::size_t i = 0; i <= beta; ++i) {
    agents.push_back({graph.vertex("s" + idx(i)), graph.vertex("t" + idx(i))});
  }

  AdversarialInstance out{NtpInstance(graph, agents, params.alpha, beta), {}, {}};
  const Graph& g = out.instance.graph();
  for (std::size_t i = 1; i <= beta; ++i) {
    out.greedy_reference.push_back(
        *g.find_edge(g.vertex("s" + idx(i)), g.vertex("v" + idx(i) + "_1")));
  }
  out.motorway_reference.push_back(*g.find_edge(g.vertex("q"), g.vertex("q1")));
  for (std::size_t j = 1; j < beta; ++j) {
    out.motorway_reference.push_back(
        *g.find_edge(g.vertex("q" + idx(j)), g.vertex("q" + idx(j + 1))));
  }
  std::sort(out.greedy_reference.begin(), out.greedy_reference.end());
  std::sort(out.motorway_reference.begin(), out.motorway_reference.end());
  return out;
}

}  // namespace transit
