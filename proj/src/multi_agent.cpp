#include "transit/multi_agent.hpp"

#include <algorithm>
#include <memory>
#include <tuple>

#include "transit/errors.hpp"
#include "transit/evaluate.hpp"

namespace transit {

namespace {

void check_bounds(const BudgetMapping& mu1, const BudgetMapping& mu2, std::size_t beta) {
  if (mu1.values().size() != beta + 1 || mu2.values().size() != beta + 1) {
    throw BudgetMismatch("budget mappings must both be defined on [0, " + std::to_string(beta) +
                         "]");
  }
}

template <class Combine>
MergedMapping merge(const BudgetMapping& mu1, const BudgetMapping& mu2, std::size_t beta,
                    Combine combine) {
  check_bounds(mu1, mu2, beta);
  std::vector<Rational> values(beta + 1);
  std::vector<std::size_t> share(beta + 1, 0);
  for (std::size_t b = 0; b <= beta; ++b) {
    values[b] = combine(mu1(0), mu2(b));
    for (std::size_t first = 1; first <= b; ++first) {
      Rational candidate = combine(mu1(first), mu2(b - first));
      if (candidate < values[b]) {
        values[b] = std::move(candidate);
        share[b] = first;
      }
    }
  }
  return {BudgetMapping(std::move(values)), std::move(share)};
}

}  // namespace

MergedMapping merge_add(const BudgetMapping& mu1, const BudgetMapping& mu2, std::size_t beta) {
  return merge(mu1, mu2, beta,
               [](const Rational& a, const Rational& b) { return Rational(a + b); });
}

MergedMapping merge_max(const BudgetMapping& mu1, const BudgetMapping& mu2, std::size_t beta) {
  return merge(mu1, mu2, beta, [](const Rational& a, const Rational& b) { return a < b ? b : a; });
}

Solution solve_one_agent(const NtpInstance& instance, Objective objective) {
  if (instance.agents().size() != 1) {
    throw AgentCount("single-agent solver needs exactly one agent, got " +
                     std::to_string(instance.agents().size()));
  }
  const auto& agent = instance.agents().front();
  const auto table = budget_dijkstra(instance, agent.s);
  const auto path = reconstruct(table, instance, agent.t, instance.beta());
  return evaluate(instance, path.discounted, objective);
}

namespace {

// A segment leaf: the cheapest route between two vertices, optionally paid
// twice (a stretch both agents share under the utilitarian objective).
struct Segment {
  VertexId from;
  VertexId to;
};

// Binary merge tree over segment mappings, remembering the budget splits so a
// witness can be read back from the chosen optimum.
class MergeTree {
 public:
  enum class Op { kLeaf, kAdd, kMax };

  static std::unique_ptr<MergeTree> leaf(Segment seg, BudgetMapping mu) {
    auto t = std::make_unique<MergeTree>();
    t->op_ = Op::kLeaf;
    t->segment_ = seg;
    t->mapping_ = std::move(mu);
    return t;
  }

  static std::unique_ptr<MergeTree> combine(Op op, std::unique_ptr<MergeTree> left,
                                            std::unique_ptr<MergeTree> right, std::size_t beta) {
    auto t = std::make_unique<MergeTree>();
    t->op_ = op;
    MergedMapping m = op == Op::kAdd ? merge_add(left->mapping_, right->mapping_, beta)
                                     : merge_max(left->mapping_, right->mapping_, beta);
    t->mapping_ = std::move(m.mapping);
    t->share_ = std::move(m.first_share);
    t->left_ = std::move(left);
    t->right_ = std::move(right);
    return t;
  }

  const BudgetMapping& mapping() const { return mapping_; }

  /// Distributes `budget` down to the leaves.
  void allocate(std::size_t budget, std::vector<std::pair<Segment, std::size_t>>& out) const {
    if (op_ == Op::kLeaf) {
      out.emplace_back(segment_, budget);
      return;
    }
    const std::size_t first = share_[budget];
    left_->allocate(first, out);
    right_->allocate(budget - first, out);
  }

 private:
  Op op_ = Op::kLeaf;
  Segment segment_{};
  BudgetMapping mapping_;
  std::vector<std::size_t> share_;
  std::unique_ptr<MergeTree> left_;
  std::unique_ptr<MergeTree> right_;
};

struct Candidate {
  bool disjoint;
  VertexId p;
  VertexId q;
  int order;
};

class TwoAgentSolver {
 public:
  TwoAgentSolver(const NtpInstance& instance, Objective objective)
      : instance_(instance), objective_(objective), beta_(instance.beta()) {
    const auto& g = instance.graph();
    tables_.reserve(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) tables_.push_back(budget_dijkstra(instance, v));
    mappings_.resize(g.vertex_count() * g.vertex_count());
    for (VertexId a = 0; a < g.vertex_count(); ++a) {
      for (VertexId b = 0; b < g.vertex_count(); ++b) {
        mappings_[a * g.vertex_count() + b] = budget_mapping(tables_[a], b);
      }
    }
  }

  TwoAgentResult solve() {
    const std::size_t n = instance_.graph().vertex_count();
    std::vector<std::pair<Rational, std::size_t>> ranked;
    std::vector<Candidate> candidates;
    candidates.push_back({true, 0, 0, 0});
    for (VertexId p = 0; p < n; ++p) {
      for (VertexId q = 0; q < n; ++q) {
        for (int order = 0; order < 4; ++order) candidates.push_back({false, p, q, order});
      }
    }
    ranked.reserve(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      ranked.emplace_back(build(candidates[i])->mapping()(beta_), i);
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    for (const auto& [value, index] : ranked) {
      const Candidate& c = candidates[index];
      auto tree = build(c);
      std::vector<std::pair<Segment, std::size_t>> leaves;
      tree->allocate(beta_, leaves);
      std::vector<EdgeId> chosen;
      for (const auto& [seg, budget] : leaves) {
        auto path = reconstruct(tables_[seg.from], instance_, seg.to, budget);
        chosen.insert(chosen.end(), path.discounted.begin(), path.discounted.end());
      }
      std::sort(chosen.begin(), chosen.end());
      chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
      if (chosen.size() > beta_) continue;  // overlapping segments; try the next candidate
      TwoAgentResult result;
      result.solution = evaluate(instance_, chosen, objective_);
      result.decomposition = {c.disjoint, c.p, c.q, c.order, value};
      return result;
    }
    throw NoPath("no feasible two-agent decomposition");
  }

 private:
  const BudgetMapping& mu(VertexId a, VertexId b) const {
    return mappings_[a * instance_.graph().vertex_count() + b];
  }

  std::unique_ptr<MergeTree> seg(VertexId a, VertexId b) const {
    return MergeTree::leaf({a, b}, mu(a, b));
  }

  std::unique_ptr<MergeTree> build(const Candidate& c) const {
    using Op = MergeTree::Op;
    const auto& a1 = instance_.agents()[0];
    const auto& a2 = instance_.agents()[1];
    const Op combine_agents = objective_ == Objective::kEgalitarian ? Op::kMax : Op::kAdd;
    if (c.disjoint) {
      return MergeTree::combine(combine_agents, seg(a1.s, a1.t), seg(a2.s, a2.t), beta_);
    }
    const bool first_forward = c.order < 2;
    const bool second_forward = c.order % 2 == 0;
    const VertexId x1 = first_forward ? c.p : c.q;
    const VertexId y1 = first_forward ? c.q : c.p;
    const VertexId x2 = second_forward ? c.p : c.q;
    const VertexId y2 = second_forward ? c.q : c.p;
    auto outer1 = MergeTree::combine(Op::kAdd, seg(a1.s, x1), seg(y1, a1.t), beta_);
    auto outer2 = MergeTree::combine(Op::kAdd, seg(a2.s, x2), seg(y2, a2.t), beta_);
    auto outer = MergeTree::combine(combine_agents, std::move(outer1), std::move(outer2), beta_);
    auto shared = MergeTree::leaf({c.p, c.q}, objective_ == Objective::kEgalitarian
                                                  ? mu(c.p, c.q)
                                                  : mu(c.p, c.q).scaled(2));
    return MergeTree::combine(Op::kAdd, std::move(outer), std::move(shared), beta_);
  }

  const NtpInstance& instance_;
  Objective objective_;
  std::size_t beta_;
  std::vector<BudgetTable> tables_;
  std::vector<BudgetMapping> mappings_;
};

}  // namespace

TwoAgentResult solve_two_agents_detailed(const NtpInstance& instance, Objective objective) {
  if (instance.agents().size() != 2) {
    throw AgentCount("two-agent solver needs exactly two agents, got " +
                     std::to_string(instance.agents().size()));
  }
  return TwoAgentSolver(instance, objective).solve();
}

Solution trivial_baseline(const NtpInstance& instance, Objective objective) {
  return evaluate(instance, std::vector<std::size_t>{}, objective);
}

Solution trivial_baseline(const PtpInstance& instance, Objective objective) {
  return evaluate(instance, std::vector<std::size_t>{}, objective);
}

}  // namespace transit
