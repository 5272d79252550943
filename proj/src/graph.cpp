#include "transit/graph.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <queue>
#include <unordered_map>

#include "transit/errors.hpp"

namespace transit {

Graph::Graph(std::vector<std::string> vertex_names, const std::vector<NamedEdge>& edges)
    : names_(std::move(vertex_names)) {
  std::unordered_map<std::string, VertexId> index;
  for (VertexId v = 0; v < names_.size(); ++v) {
    if (!index.emplace(names_[v], v).second) {
      throw InvalidInstance("vertices[" + std::to_string(v) + "]",
                            "duplicate vertex name '" + names_[v] + "'");
    }
  }
  edges_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& in = edges[i];
    const std::string field = "edges[" + std::to_string(i) + "]";
    auto a = index.find(in.u);
    auto b = index.find(in.v);
    if (a == index.end() || b == index.end()) {
      throw InvalidInstance(field, "unknown endpoint '" + (a == index.end() ? in.u : in.v) + "'");
    }
    if (a->second == b->second) throw InvalidInstance(field, "self-loop at '" + in.u + "'");
    if (in.weight < 0) throw InvalidInstance(field, "negative weight");
    edges_.push_back(Edge{std::min(a->second, b->second), std::max(a->second, b->second), in.weight});
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.u, x.v) < std::tie(y.u, y.v);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw InvalidInstance("edges", "parallel edges between '" + names_[edges_[i].u] + "' and '" +
                                         names_[edges_[i].v] + "'");
    }
  }
  adjacency_.assign(names_.size(), {});
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    adjacency_[edges_[e].u].push_back({edges_[e].v, e});
    adjacency_[edges_[e].v].push_back({edges_[e].u, e});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Incidence& x, const Incidence& y) { return x.to < y.to; });
  }
}

std::optional<VertexId> Graph::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

VertexId Graph::vertex(const std::string& name) const {
  if (auto v = find(name)) return *v;
  throw InvalidVertex("unknown vertex '" + name + "'");
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (!contains(a) || !contains(b)) return std::nullopt;
  for (const auto& inc : adjacency_[a]) {
    if (inc.to == b) return inc.edge;
  }
  return std::nullopt;
}

bool Graph::connected() const {
  if (names_.empty()) return true;
  std::vector<bool> seen(names_.size(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const auto& inc : adjacency_[v]) {
      if (!seen[inc.to]) {
        seen[inc.to] = true;
        ++count;
        stack.push_back(inc.to);
      }
    }
  }
  return count == names_.size();
}

std::vector<NamedEdge> Graph::named_edges() const {
  std::vector<NamedEdge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({names_[e.u], names_[e.v], e.weight});
  return out;
}

bool Graph::same_edges(const Graph& other) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& x = edges_[i];
    const auto& y = other.edges_[i];
    if (x.u != y.u || x.v != y.v || x.weight != y.weight) return false;
  }
  return true;
}

std::vector<Cost> shortest_distances(const Graph& graph, VertexId source,
                                     std::span<const Cost> edge_cost) {
  if (!graph.contains(source)) throw InvalidVertex("source vertex out of range");
  std::vector<Cost> dist(graph.vertex_count(), Cost::infinity());
  std::vector<bool> done(graph.vertex_count(), false);
  using Entry = std::pair<Cost, VertexId>;
  auto later = [](const Entry& a, const Entry& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(later)> queue(later);
  dist[source] = Cost();
  queue.emplace(Cost(), source);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (done[v]) continue;
    done[v] = true;
    for (const auto& inc : graph.neighbors(v)) {
      if (done[inc.to]) continue;
      Cost candidate = d + edge_cost[inc.edge];
      if (candidate < dist[inc.to]) {
        dist[inc.to] = candidate;
        queue.emplace(std::move(candidate), inc.to);
      }
    }
  }
  return dist;
}

}  // namespace transit
