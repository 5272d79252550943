#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "transit/rational.hpp"

namespace transit {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Undirected weighted edge, stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Rational weight;

  VertexId other(VertexId x) const { return x == u ? v : u; }
};

/// Input form of an edge, by vertex name.
struct NamedEdge {
  std::string u;
  std::string v;
  Rational weight;
};

/// Simple undirected graph with named vertices and non-negative rational weights.
///
/// Edges are stored in canonical order: sorted by (min endpoint id, max
/// endpoint id). An EdgeId is therefore also the edge's rank in lexicographic
/// order, which the greedy tie-breaks rely on.
class Graph {
 public:
  struct Incidence {
    VertexId to;
    EdgeId edge;
  };

  Graph() = default;
  /// Throws InvalidInstance on duplicate names, unknown endpoints, self-loops,
  /// parallel edges, or negative weights.
  Graph(std::vector<std::string> vertex_names, const std::vector<NamedEdge>& edges);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find(const std::string& name) const;
  /// Throws InvalidVertex for unknown names.
  VertexId vertex(const std::string& name) const;

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

  std::span<const Incidence> neighbors(VertexId v) const { return adjacency_.at(v); }

  bool contains(VertexId v) const { return v < names_.size(); }
  bool connected() const;

  std::vector<NamedEdge> named_edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.edges_.size() == b.edges_.size() && a.same_edges(b);
  }

 private:
  bool same_edges(const Graph& other) const;

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// Single-source shortest distances under per-edge costs `edge_cost`
/// (indexed by EdgeId). Unreachable vertices get infinity.
std::vector<Cost> shortest_distances(const Graph& graph, VertexId source,
                                     std::span<const Cost> edge_cost);

}  // namespace transit
