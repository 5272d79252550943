#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "transit/graph.hpp"
#include "transit/instance.hpp"

namespace transit {

/// Universe, a collection of subsets, and a cover size bound rho.
class SetCoverInstance {
 public:
  /// Throws InvalidInstance on duplicate items, unknown subset members,
  /// rho = 0, or rho > number of subsets.
  SetCoverInstance(std::vector<std::string> universe, std::vector<std::vector<std::string>> subsets,
                   std::size_t rho);

  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<std::vector<std::string>>& subsets() const { return subsets_; }
  std::size_t rho() const { return rho_; }

  friend bool operator==(const SetCoverInstance&, const SetCoverInstance&) = default;

 private:
  std::vector<std::string> universe_;
  std::vector<std::vector<std::string>> subsets_;
  std::size_t rho_;
};

/// Simple graph (U, K) and a cover size bound rho <= |U|.
class VertexCoverInstance {
 public:
  VertexCoverInstance(std::vector<std::string> vertices,
                      std::vector<std::pair<std::string, std::string>> edges, std::size_t rho);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::pair<std::string, std::string>>& edges() const { return edges_; }
  std::size_t rho() const { return rho_; }

  friend bool operator==(const VertexCoverInstance&, const VertexCoverInstance&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::pair<std::string, std::string>> edges_;
  std::size_t rho_;
};

/// Brute force: does a cover with at most rho subsets exist?
bool has_set_cover(const SetCoverInstance& sc);
/// Brute force: does a vertex cover with at most rho vertices exist?
bool has_vertex_cover(const VertexCoverInstance& vc);

struct SetCoverReduction {
  NtpInstance instance;
  Rational kappa_eg;  // 2 * alpha
  Rational kappa_ut;  // 2 * alpha * |U|
};

/// Item vertices x_u, subset vertices y_j, target t; item edges x_u-y_j for
/// u in S_j, target edges y_j-t, all of weight 1; one agent (x_u, t) per item;
/// budget |U| + rho. Vertex ids follow input order (items, subsets, t).
/// Throws Inapplicable if an item lies in no subset (the incidence graph would
/// be disconnected and the instance is trivially a No-instance).
SetCoverReduction setcover_to_ntp(const SetCoverInstance& sc, const Rational& alpha);

struct VertexCoverReduction {
  PtpInstance instance;
  Rational kappa;  // 1/10
};

/// Stops at 1..|U| (vertices in input order), detour stops i + 1/10, and a
/// constraint stop |U| + 1 + 1/10. One agent per edge between its endpoint
/// positions and one per vertex from i + 1/10 to |U| + 1. alpha = 0,
/// beta = |U| + 1 + rho.
VertexCoverReduction vertexcover_to_ptp(const VertexCoverInstance& vc);

/// Railway design variant: selected edges keep their weight, all others are
/// multiplied by zeta; demand tau between vertex pairs replaces agents; the
/// budget caps the total weight of selected edges.
class RdpInstance {
 public:
  /// `demand` is a dense symmetric matrix (vertex_count^2, row-major) with a
  /// zero diagonal. Throws InvalidInstance otherwise, or if zeta <= 1.
  RdpInstance(Graph graph, std::vector<std::uint64_t> demand, Cost zeta, Rational budget);

  const Graph& graph() const { return graph_; }
  std::uint64_t demand(VertexId u, VertexId v) const {
    return demand_[u * graph_.vertex_count() + v];
  }
  const std::vector<std::uint64_t>& demand_matrix() const { return demand_; }
  const Cost& zeta() const { return zeta_; }
  const Rational& budget() const { return budget_; }

  friend bool operator==(const RdpInstance&, const RdpInstance&) = default;

 private:
  Graph graph_;
  std::vector<std::uint64_t> demand_;
  Cost zeta_;
  Rational budget_;
};

/// Requires every edge weight to be 1 (otherwise the two budget notions
/// disagree; throws Inapplicable). tau counts agents per unordered pair,
/// zeta = 1/alpha (infinite for alpha = 0), budget = beta.
RdpInstance ntp_to_rdp(const NtpInstance& ntp);

struct RdpEvaluation {
  Cost cost;
  bool feasible = true;  // w(selection) <= budget
};

/// Egalitarian: max over pairs of tau * pi. Utilitarian: half the sum over
/// ordered pairs, i.e. the sum over unordered pairs.
RdpEvaluation rdp_cost(const RdpInstance& rdp, const std::vector<EdgeId>& selection,
                       Objective objective);

}  // namespace transit
