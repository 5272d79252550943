#include "transit/budget_dijkstra.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "transit/errors.hpp"

namespace transit {

BudgetTable::BudgetTable(VertexId source, std::size_t vertex_count, std::size_t requested_budget,
                         std::size_t effective_budget)
    : source_(source),
      vertex_count_(vertex_count),
      requested_budget_(requested_budget),
      effective_budget_(effective_budget),
      dist_(vertex_count * (effective_budget + 1), Cost::infinity()),
      pred_(vertex_count * (effective_budget + 1)) {}

const Cost& BudgetTable::dist(VertexId v, std::size_t b) const {
  if (v >= vertex_count_) throw InvalidVertex("vertex out of range");
  if (v == source_) return zero_;
  return dist_[index(v, column(b))];
}

const Predecessor& BudgetTable::pred(VertexId v, std::size_t b) const {
  if (v >= vertex_count_) throw InvalidVertex("vertex out of range");
  return pred_[index(v, column(b))];
}

namespace {

struct QueueEntry {
  Cost distance;
  std::size_t budget;
  VertexId vertex;
};

struct LaterFirst {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.distance != b.distance) return a.distance > b.distance;
    return std::tie(a.budget, a.vertex) > std::tie(b.budget, b.vertex);
  }
};

}  // namespace

BudgetTable budget_dijkstra(const NtpInstance& instance, VertexId source,
                            std::vector<TraceStep>* trace) {
  const auto& g = instance.graph();
  if (!g.contains(source)) throw InvalidVertex("source vertex not in graph");
  const std::size_t beta = std::min(instance.beta(), g.edge_count());
  BudgetTable table(source, g.vertex_count(), instance.beta(), beta);
  std::vector<bool> done(g.vertex_count() * (beta + 1), false);
  auto slot = [beta](VertexId v, std::size_t b) { return v * (beta + 1) + b; };

  std::priority_queue<QueueEntry, std::vector<QueueEntry>, LaterFirst> queue;
  table.raw_dist(source, 0) = Cost();
  queue.push({Cost(), 0, source});

  std::vector<CellUpdate>* updates = nullptr;
  auto relax = [&](VertexId u, std::size_t b, Cost candidate, Predecessor how) {
    Cost& current = table.raw_dist(u, b);
    if (!(candidate < current)) return;
    current = candidate;
    table.raw_pred(u, b) = how;
    if (updates) updates->push_back({{u, b}, candidate});
    queue.push({std::move(candidate), b, u});
  };

  while (!queue.empty()) {
    QueueEntry top = queue.top();
    queue.pop();
    const VertexId v = top.vertex;
    const std::size_t b = top.budget;
    if (done[slot(v, b)] || top.distance != table.raw_dist(v, b)) continue;
    done[slot(v, b)] = true;
    table.record_pivot({v, b});
    if (trace) {
      trace->push_back({{v, b}, top.distance, {}});
      updates = &trace->back().updates;
    }

    const Cost base = top.distance;
    for (const auto& inc : g.neighbors(v)) {
      const VertexId u = inc.to;
      if (u == source) continue;
      const Rational& w = g.edge(inc.edge).weight;
      relax(u, b, base + Cost(w), {Predecessor::Kind::kEdge, {v, b}, inc.edge, false});
      if (b < beta) {
        relax(u, b + 1, base + Cost(Rational(instance.alpha() * w)),
              {Predecessor::Kind::kEdge, {v, b}, inc.edge, true});
      }
    }
    if (v != source && b < beta) {
      relax(v, b + 1, base, {Predecessor::Kind::kBudgetIncrease, {v, b}, 0, false});
    }
  }
  return table;
}

BudgetMapping::BudgetMapping(std::vector<Rational> values) : values_(std::move(values)) {}

BudgetMapping BudgetMapping::scaled(const Rational& factor) const {
  std::vector<Rational> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.emplace_back(v * factor);
  return BudgetMapping(std::move(out));
}

BudgetMapping budget_mapping(const BudgetTable& table, VertexId target) {
  if (target >= table.vertex_count()) throw InvalidVertex("target vertex not in graph");
  std::vector<Rational> values;
  values.reserve(table.budget() + 1);
  for (std::size_t b = 0; b <= table.budget(); ++b) {
    const Cost& d = table.dist(target, b);
    if (d.is_infinite()) throw NoPath("target unreachable from source");
    values.push_back(d.value());
  }
  return BudgetMapping(std::move(values));
}

ReconstructedPath reconstruct(const BudgetTable& table, const Graph& graph, const Rational& alpha,
                              VertexId target, std::size_t budget) {
  if (target >= table.vertex_count()) throw InvalidVertex("target vertex not in graph");
  if (table.dist(target, budget).is_infinite()) throw NoPath("no path for requested routing pair");
  ReconstructedPath out;
  out.vertices.push_back(target);
  if (target != table.source()) {
    RoutingPair at{target, std::min(budget, table.effective_budget())};
    while (!(at.vertex == table.source() && at.budget == 0)) {
      const Predecessor& p = table.pred(at.vertex, at.budget);
      if (p.kind == Predecessor::Kind::kNone) throw NoPath("broken predecessor chain");
      if (p.kind == Predecessor::Kind::kEdge) {
        out.edges.push_back(p.edge);
        out.vertices.push_back(p.from.vertex);
        if (p.discounted) out.discounted.push_back(p.edge);
      }
      at = p.from;
    }
  }
  std::reverse(out.vertices.begin(), out.vertices.end());
  std::reverse(out.edges.begin(), out.edges.end());
  std::sort(out.discounted.begin(), out.discounted.end());
  out.cost = 0;
  for (EdgeId e : out.edges) {
    const Rational& w = graph.edge(e).weight;
    out.cost += std::binary_search(out.discounted.begin(), out.discounted.end(), e)
                    ? Rational(alpha * w)
                    : w;
  }
  return out;
}

}  // namespace transit
