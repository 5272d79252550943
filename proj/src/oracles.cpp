#include "transit/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "transit/errors.hpp"
#include "transit/evaluate.hpp"

namespace transit {

std::uint64_t count_subsets(std::size_t n, std::size_t k_max, std::uint64_t limit) {
  const std::uint64_t ceiling = limit + 1;
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, k)
  for (std::size_t k = 0; k <= std::min(k_max, n); ++k) {
    if (k > 0) {
      // C(n,k) = C(n,k-1) * (n-k+1) / k, exact at each step.
      unsigned __int128 next = static_cast<unsigned __int128>(binom) * (n - k + 1) / k;
      binom = next > ceiling ? ceiling : static_cast<std::uint64_t>(next);
    }
    total += binom;
    if (total >= ceiling) return ceiling;
  }
  return total;
}

namespace {

// Visits every subset of {0..n-1} with at most k elements in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> current;
  visit(current);
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    if (current.size() == k) return;
    for (std::size_t i = start; i < n; ++i) {
      current.push_back(i);
      visit(current);
      extend(i + 1);
      current.pop_back();
    }
  };
  extend(0);
}

class Tracker {
 public:
  Tracker(Objective objective, std::size_t max_witnesses)
      : max_witnesses_(max_witnesses) {
    report_.objective = objective;
  }

  void offer(const std::vector<std::size_t>& subset, const Rational& cost) {
    ++report_.explored;
    if (!best_ || cost < *best_) {
      best_ = cost;
      report_.witnesses.clear();
    }
    if (cost == *best_ && report_.witnesses.size() < max_witnesses_) {
      report_.witnesses.push_back(subset);
    }
  }

  OracleReport finish() {
    report_.optimum = *best_;
    return std::move(report_);
  }

 private:
  std::size_t max_witnesses_;
  std::optional<Rational> best_;
  OracleReport report_;
};

Rational headline(const std::vector<Rational>& costs, Objective objective) {
  Rational out = 0;
  for (const auto& c : costs) {
    if (objective == Objective::kUtilitarian) {
      out += c;
    } else if (c > out) {
      out = c;
    }
  }
  return out;
}

void guard(std::size_t candidates, std::size_t beta, std::uint64_t cap) {
  auto count = count_subsets(candidates, beta, cap);
  if (count > cap) {
    throw TooLarge("exhaustive search over " + std::to_string(candidates) +
                   " candidates with budget " + std::to_string(beta) + " exceeds the cap of " +
                   std::to_string(cap) + " subsets");
  }
}

}  // namespace

OracleReport oracle_ptp(const PtpInstance& instance, Objective objective,
                        std::size_t max_witnesses, std::uint64_t cap) {
  const std::size_t m = instance.stops().size();
  guard(m, instance.beta(), cap);
  Tracker tracker(objective, std::max<std::size_t>(max_witnesses, 1));
  std::vector<Rational> costs(instance.agents().size());
  for_each_subset(m, instance.beta(), [&](const std::vector<std::size_t>& subset) {
    for (std::size_t i = 0; i < costs.size(); ++i) {
      costs[i] = ptp_agent_cost(instance, subset, instance.agents()[i]);
    }
    tracker.offer(subset, headline(costs, objective));
  });
  return tracker.finish();
}

OracleReport oracle_ntp(const NtpInstance& instance, Objective objective,
                        std::size_t max_witnesses, std::uint64_t cap) {
  const auto& g = instance.graph();
  guard(g.edge_count(), instance.beta(), cap);
  for (const auto& a : instance.agents()) {
    if (!g.contains(a.s) || !g.contains(a.t)) throw InvalidAgent("agent terminal is not a vertex");
  }

  std::vector<VertexId> sources;
  for (const auto& a : instance.agents()) sources.push_back(a.s);
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());

  std::vector<Cost> weights;
  for (const auto& e : g.edges()) weights.emplace_back(e.weight);
  std::vector<Cost> discounted;
  for (const auto& e : g.edges()) discounted.emplace_back(Rational(instance.alpha() * e.weight));

  Tracker tracker(objective, std::max<std::size_t>(max_witnesses, 1));
  std::vector<Rational> costs(instance.agents().size());
  std::map<VertexId, std::vector<Cost>> dist;
  for_each_subset(g.edge_count(), instance.beta(), [&](const std::vector<std::size_t>& subset) {
    std::vector<Cost> w = weights;
    for (std::size_t e : subset) w[e] = discounted[e];
    for (VertexId s : sources) dist[s] = shortest_distances(g, s, w);
    for (std::size_t i = 0; i < costs.size(); ++i) {
      const auto& a = instance.agents()[i];
      costs[i] = dist[a.s][a.t].value();
    }
    tracker.offer(subset, headline(costs, objective));
  });
  return tracker.finish();
}

Rational oracle_paths(const NtpInstance& instance, const NtpAgent& agent, std::size_t budget) {
  const auto& g = instance.graph();
  if (g.vertex_count() > kOraclePathsMaxVertices) {
    throw TooLarge("path oracle limited to " + std::to_string(kOraclePathsMaxVertices) +
                   " vertices");
  }
  if (!g.contains(agent.s) || !g.contains(agent.t)) throw InvalidAgent("agent terminal is not a vertex");
  if (agent.s == agent.t) return 0;

  std::optional<Rational> best;
  std::vector<bool> on_path(g.vertex_count(), false);
  std::vector<EdgeId> path;

  auto score_path = [&]() {
    const std::size_t len = path.size();
    // Every subset of at most `budget` edges of this path.
    for_each_subset(len, budget, [&](const std::vector<std::size_t>& subset) {
      Rational cost = 0;
      std::size_t next = 0;
      for (std::size_t i = 0; i < len; ++i) {
        const auto& w = g.edge(path[i]).weight;
        if (next < subset.size() && subset[next] == i) {
          cost += instance.alpha() * w;
          ++next;
        } else {
          cost += w;
        }
      }
      if (!best || cost < *best) best = cost;
    });
  };

  std::function<void(VertexId)> walk = [&](VertexId v) {
    if (v == agent.t) {
      score_path();
      return;
    }
    for (const auto& inc : g.neighbors(v)) {
      if (on_path[inc.to]) continue;
      on_path[inc.to] = true;
      path.push_back(inc.edge);
      walk(inc.to);
      path.pop_back();
      on_path[inc.to] = false;
    }
  };
  on_path[agent.s] = true;
  walk(agent.s);
  if (!best) throw NoPath("no path between agent terminals");
  return *best;
}

}  // namespace transit
