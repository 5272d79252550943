#pragma once

#include <cstddef>
#include <vector>

#include "transit/instance.hpp"

namespace transit {

/// A vertex paired with the number of discounted edges spent reaching it.
struct RoutingPair {
  VertexId vertex = 0;
  std::size_t budget = 0;
  friend bool operator==(const RoutingPair&, const RoutingPair&) = default;
};

/// How a routing pair obtained its final distance.
struct Predecessor {
  enum class Kind { kNone, kEdge, kBudgetIncrease };
  Kind kind = Kind::kNone;
  RoutingPair from;
  EdgeId edge = 0;          // valid for kEdge
  bool discounted = false;  // valid for kEdge
};

/// Optimal distances from one source for every (vertex, budget) pair.
class BudgetTable {
 public:
  BudgetTable(VertexId source, std::size_t vertex_count, std::size_t requested_budget,
              std::size_t effective_budget);

  VertexId source() const { return source_; }
  std::size_t vertex_count() const { return vertex_count_; }
  /// Budget asked for (the instance's beta).
  std::size_t budget() const { return requested_budget_; }
  /// Columns actually computed: min(beta, number of edges).
  std::size_t effective_budget() const { return effective_budget_; }

  /// Minimum cost from the source to v discounting at most b edges. Budgets
  /// beyond the effective bound read the last computed column; the source
  /// reads zero for every budget.
  const Cost& dist(VertexId v, std::size_t b) const;
  const Predecessor& pred(VertexId v, std::size_t b) const;

  /// Pivot pairs in extraction order, starting with (source, 0).
  const std::vector<RoutingPair>& pivots() const { return pivots_; }

  // Mutators used while the table is being filled.
  Cost& raw_dist(VertexId v, std::size_t b) { return dist_[index(v, b)]; }
  const Cost& raw_dist(VertexId v, std::size_t b) const { return dist_[index(v, b)]; }
  Predecessor& raw_pred(VertexId v, std::size_t b) { return pred_[index(v, b)]; }
  void record_pivot(RoutingPair p) { pivots_.push_back(p); }

 private:
  std::size_t index(VertexId v, std::size_t b) const { return v * (effective_budget_ + 1) + b; }
  std::size_t column(std::size_t b) const { return b < effective_budget_ ? b : effective_budget_; }

  VertexId source_;
  std::size_t vertex_count_;
  std::size_t requested_budget_;
  std::size_t effective_budget_;
  std::vector<Cost> dist_;
  std::vector<Predecessor> pred_;
  std::vector<RoutingPair> pivots_;
  Cost zero_;
};

/// One cell written during an iteration.
struct CellUpdate {
  RoutingPair pair;
  Cost value;
};

/// Snapshot of one iteration: the pivot and every cell it changed.
struct TraceStep {
  RoutingPair pivot;
  Cost pivot_distance;
  std::vector<CellUpdate> updates;
};

/// Dijkstra over routing pairs (v, b). From each pivot it applies the
/// non-reducing update D[u,b] <- D[v,b] + w, the reducing update
/// D[u,b+1] <- D[v,b] + alpha*w, and the budget-increasing update
/// D[v,b+1] <- D[v,b]. The queue orders by (distance, budget, vertex id).
/// Fills the whole table; `trace`, when given, receives one step per pivot.
/// Throws InvalidVertex if the source is not in the graph.
BudgetTable budget_dijkstra(const NtpInstance& instance, VertexId source,
                            std::vector<TraceStep>* trace = nullptr);

/// Non-increasing curve mu(b) of optimal source-target distance for b = 0..beta.
class BudgetMapping {
 public:
  BudgetMapping() = default;
  explicit BudgetMapping(std::vector<Rational> values);

  std::size_t budget() const { return values_.empty() ? 0 : values_.size() - 1; }
  const Rational& operator()(std::size_t b) const { return values_.at(b); }
  const std::vector<Rational>& values() const { return values_; }

  /// Pointwise scaling.
  BudgetMapping scaled(const Rational& factor) const;

  friend bool operator==(const BudgetMapping&, const BudgetMapping&) = default;

 private:
  std::vector<Rational> values_;
};

/// mu(b) = dist[target, b] for b = 0..table.budget(). Throws InvalidVertex for
/// unknown targets and NoPath if the target is unreachable.
BudgetMapping budget_mapping(const BudgetTable& table, VertexId target);

/// A path recovered from the predecessor chain.
struct ReconstructedPath {
  std::vector<VertexId> vertices;   // source ... target
  std::vector<EdgeId> edges;        // in travel order
  std::vector<EdgeId> discounted;   // sorted
  Rational cost;
};

/// Throws NoPath when dist[target, budget] is infinite.
ReconstructedPath reconstruct(const BudgetTable& table, const Graph& graph, const Rational& alpha,
                              VertexId target, std::size_t budget);
inline ReconstructedPath reconstruct(const BudgetTable& table, const NtpInstance& instance,
                                     VertexId target, std::size_t budget) {
  return reconstruct(table, instance.graph(), instance.alpha(), target, budget);
}

}  // namespace transit
