#pragma once

// Seeded random instance generators shared by unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "transit/instance.hpp"
#include "transit/oracles.hpp"
#include "transit/reductions.hpp"

namespace transit::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  return items[uniform(rng, 0, items.size() - 1)];
}

struct GraphShape {
  std::size_t max_vertices = 7;
  std::size_t max_edges = 10;
  long max_weight = 10;
  bool unit_weights = false;
};

/// Random spanning tree plus extra edges; vertex names "v0".."v{n-1}".
inline Graph random_connected_graph(Rng& rng, const GraphShape& shape, std::size_t min_vertices = 2) {
  const std::size_t n = uniform(rng, min_vertices, shape.max_vertices);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  auto weight = [&]() -> Rational {
    if (shape.unit_weights) return 1;
    return static_cast<long>(uniform(rng, 1, static_cast<std::size_t>(shape.max_weight)));
  };
  std::set<std::pair<std::size_t, std::size_t>> used;
  std::vector<NamedEdge> edges;
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t a = order[i];
    std::size_t b = order[uniform(rng, 0, i - 1)];
    used.insert(std::minmax(a, b));
    edges.push_back({names[a], names[b], weight()});
  }
  const std::size_t max_edges = std::min(shape.max_edges, n * (n - 1) / 2);
  const std::size_t target = uniform(rng, edges.size(), std::max(edges.size(), max_edges));
  while (edges.size() < target) {
    std::size_t a = uniform(rng, 0, n - 1);
    std::size_t b = uniform(rng, 0, n - 1);
    if (a == b || !used.insert(std::minmax(a, b)).second) continue;
    edges.push_back({names[a], names[b], weight()});
  }
  return Graph(names, edges);
}

inline NtpInstance random_ntp(Rng& rng, std::size_t agents, const std::vector<Rational>& alphas,
                              std::size_t max_beta, const GraphShape& shape = {}) {
  Graph g = random_connected_graph(rng, shape);
  std::vector<NtpAgent> list;
  for (std::size_t i = 0; i < agents; ++i) {
    list.push_back({uniform(rng, 0, g.vertex_count() - 1), uniform(rng, 0, g.vertex_count() - 1)});
  }
  const Rational alpha = pick(rng, alphas);
  const std::size_t beta = uniform(rng, 0, max_beta);
  return NtpInstance(std::move(g), std::move(list), alpha, beta);
}

/// Stops and terminals on a half-integer grid in [0, 10].
inline PtpInstance random_ptp(Rng& rng, std::size_t max_stops, std::size_t max_agents,
                              std::size_t max_beta, const std::vector<Rational>& alphas) {
  const std::size_t m = uniform(rng, 1, max_stops);
  std::set<std::size_t> grid;
  while (grid.size() < m) grid.insert(uniform(rng, 0, 20));
  std::vector<Rational> stops;
  for (auto g : grid) stops.emplace_back(static_cast<long>(g), 2L);
  for (auto& s : stops) s.canonicalize();
  const std::size_t n = uniform(rng, 1, max_agents);
  std::vector<PtpAgent> agents;
  for (std::size_t i = 0; i < n; ++i) {
    auto a = uniform(rng, 0, 20);
    auto b = uniform(rng, 0, 20);
    if (b < a) std::swap(a, b);
    Rational s(static_cast<long>(a), 2L);
    Rational t(static_cast<long>(b), 2L);
    s.canonicalize();
    t.canonicalize();
    agents.push_back({s, t});
  }
  return PtpInstance(std::move(stops), std::move(agents), pick(rng, alphas), uniform(rng, 0, max_beta));
}

/// Every item lies in at least one subset, and the reduced instance stays
/// within `subset_cap` oracle evaluations.
inline SetCoverInstance random_setcover(Rng& rng, std::size_t max_items, std::size_t max_subsets,
                                        std::size_t max_rho, std::uint64_t subset_cap) {
  for (;;) {
    const std::size_t n = uniform(rng, 1, max_items);
    const std::size_t k = uniform(rng, 1, max_subsets);
    std::vector<std::string> universe;
    for (std::size_t i = 0; i < n; ++i) universe.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<std::set<std::string>> members(k);
    for (const auto& item : universe) {
      members[uniform(rng, 0, k - 1)].insert(item);
      if (uniform(rng, 0, 3) == 0) members[uniform(rng, 0, k - 1)].insert(item);
    }
    std::vector<std::vector<std::string>> subsets;
    std::size_t incidences = 0;
    for (const auto& m : members) {
      subsets.emplace_back(m.begin(), m.end());
      incidences += m.size();
    }
    const std::size_t rho = uniform(rng, 1, std::min(max_rho, k));
    const std::size_t edges = incidences + k;
    if (count_subsets(edges, n + rho, subset_cap) > subset_cap) continue;
    return SetCoverInstance(std::move(universe), std::move(subsets), rho);
  }
}

inline VertexCoverInstance random_vertexcover(Rng& rng, std::size_t max_vertices) {
  const std::size_t n = uniform(rng, 1, max_vertices);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("u" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (uniform(rng, 0, 1) == 1) edges.emplace_back(names[a], names[b]);
    }
  }
  return VertexCoverInstance(std::move(names), std::move(edges), uniform(rng, 0, n));
}

}  // namespace transit::testing
