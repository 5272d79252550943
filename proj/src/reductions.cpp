#include "transit/reductions.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "transit/errors.hpp"

namespace transit {

SetCoverInstance::SetCoverInstance(std::vector<std::string> universe,
                                   std::vector<std::vector<std::string>> subsets, std::size_t rho)
    : universe_(std::move(universe)), subsets_(std::move(subsets)), rho_(rho) {
  std::set<std::string> items;
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if (!items.insert(universe_[i]).second) {
      throw InvalidInstance("universe[" + std::to_string(i) + "]", "duplicate item");
    }
  }
  for (std::size_t j = 0; j < subsets_.size(); ++j) {
    std::set<std::string> seen;
    for (std::size_t k = 0; k < subsets_[j].size(); ++k) {
      const std::string field = "subsets[" + std::to_string(j) + "][" + std::to_string(k) + "]";
      if (!items.count(subsets_[j][k])) throw InvalidInstance(field, "item not in universe");
      if (!seen.insert(subsets_[j][k]).second) throw InvalidInstance(field, "duplicate item");
    }
  }
  if (rho_ == 0) throw InvalidInstance("rho", "rho must be positive");
  if (rho_ > subsets_.size()) throw InvalidInstance("rho", "rho exceeds the number of subsets");
}

VertexCoverInstance::VertexCoverInstance(std::vector<std::string> vertices,
                                         std::vector<std::pair<std::string, std::string>> edges,
                                         std::size_t rho)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), rho_(rho) {
  std::vector<NamedEdge> named;
  for (const auto& [u, v] : edges_) named.push_back({u, v, 1});
  Graph check(vertices_, named);  // rejects duplicates, self-loops, parallel edges
  if (rho_ > vertices_.size()) throw InvalidInstance("rho", "rho exceeds the number of vertices");
}

bool has_set_cover(const SetCoverInstance& sc) {
  const std::size_t n = sc.subsets().size();
  std::unordered_map<std::string, std::size_t> bit;
  for (std::size_t i = 0; i < sc.universe().size(); ++i) bit[sc.universe()[i]] = i;
  std::vector<std::uint64_t> masks;
  for (const auto& s : sc.subsets()) {
    std::uint64_t m = 0;
    for (const auto& item : s) m |= std::uint64_t{1} << bit[item];
    masks.push_back(m);
  }
  const std::uint64_t full =
      sc.universe().size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << sc.universe().size()) - 1;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << n); ++pick) {
    if (static_cast<std::size_t>(__builtin_popcountll(pick)) > sc.rho()) continue;
    std::uint64_t covered = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (pick >> j & 1) covered |= masks[j];
    }
    if (covered == full) return true;
  }
  return false;
}

bool has_vertex_cover(const VertexCoverInstance& vc) {
  const std::size_t n = vc.vertices().size();
  std::unordered_map<std::string, std::size_t> id;
  for (std::size_t i = 0; i < n; ++i) id[vc.vertices()[i]] = i;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << n); ++pick) {
    if (static_cast<std::size_t>(__builtin_popcountll(pick)) > vc.rho()) continue;
    bool ok = true;
    for (const auto& [u, v] : vc.edges()) {
      if (!(pick >> id[u] & 1) && !(pick >> id[v] & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

SetCoverReduction setcover_to_ntp(const SetCoverInstance& sc, const Rational& alpha) {
  std::vector<std::string> names;
  for (const auto& item : sc.universe()) names.push_back("x_" + item);
  for (std::size_t j = 0; j < sc.subsets().size(); ++j) names.push_back("y_" + std::to_string(j));
  names.push_back("t");

  std::set<std::string> covered;
  std::vector<NamedEdge> edges;
  for (std::size_t j = 0; j < sc.subsets().size(); ++j) {
    for (const auto& item : sc.subsets()[j]) {
      edges.push_back({"x_" + item, "y_" + std::to_string(j), 1});
      covered.insert(item);
    }
  }
  for (std::size_t j = 0; j < sc.subsets().size(); ++j) {
    edges.push_back({"y_" + std::to_string(j), "t", 1});
  }
  for (const auto& item : sc.universe()) {
    if (!covered.count(item)) {
      throw Inapplicable("item '" + item + "' lies in no subset; the instance has no cover");
    }
  }

  Graph graph(names, edges);
  std::vector<NtpAgent> agents;
  const VertexId target = graph.vertex("t");
  for (const auto& item : sc.universe()) agents.push_back({graph.vertex("x_" + item), target});
  const std::size_t n = sc.universe().size();
  NtpInstance instance(std::move(graph), std::move(agents), alpha, n + sc.rho());
  Rational kappa_eg = 2 * alpha;
  Rational kappa_ut = kappa_eg * Rational(static_cast<long>(n));
  return {std::move(instance), std::move(kappa_eg), std::move(kappa_ut)};
}

VertexCoverReduction vertexcover_to_ptp(const VertexCoverInstance& vc) {
  const std::size_t n = vc.vertices().size();
  const Rational tenth(1, 10);
  std::unordered_map<std::string, long> position;
  for (std::size_t i = 0; i < n; ++i) position[vc.vertices()[i]] = static_cast<long>(i + 1);
  const Rational t(static_cast<long>(n + 1));

  std::vector<Rational> stops;
  for (std::size_t i = 1; i <= n; ++i) {
    stops.emplace_back(static_cast<long>(i));
    stops.emplace_back(Rational(static_cast<long>(i)) + tenth);
  }
  stops.emplace_back(t + tenth);

  std::vector<PtpAgent> agents;
  for (const auto& [u, v] : vc.edges()) {
    Rational a(position[u]);
    Rational b(position[v]);
    if (b < a) std::swap(a, b);
    agents.push_back({a, b});
  }
  for (std::size_t i = 1; i <= n; ++i) {
    agents.push_back({Rational(static_cast<long>(i)) + tenth, t});
  }
  PtpInstance instance(std::move(stops), std::move(agents), 0, n + 1 + vc.rho());
  return {std::move(instance), tenth};
}

RdpInstance::RdpInstance(Graph graph, std::vector<std::uint64_t> demand, Cost zeta,
                         Rational budget)
    : graph_(std::move(graph)), demand_(std::move(demand)), zeta_(std::move(zeta)),
      budget_(std::move(budget)) {
  const std::size_t n = graph_.vertex_count();
  if (demand_.size() != n * n) throw InvalidInstance("demand", "matrix size mismatch");
  for (std::size_t u = 0; u < n; ++u) {
    if (demand_[u * n + u] != 0) throw InvalidInstance("demand", "diagonal must be zero");
    for (std::size_t v = u + 1; v < n; ++v) {
      if (demand_[u * n + v] != demand_[v * n + u]) {
        throw InvalidInstance("demand", "matrix must be symmetric");
      }
    }
  }
  if (zeta_ <= Cost(1)) throw InvalidInstance("zeta", "zeta must exceed 1");
  if (budget_ < 0) throw InvalidInstance("budget", "budget must be non-negative");
}

RdpInstance ntp_to_rdp(const NtpInstance& ntp) {
  const auto& g = ntp.graph();
  for (const auto& e : g.edges()) {
    if (e.weight != 1) throw Inapplicable("conversion requires unit edge weights");
  }
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> demand(n * n, 0);
  for (const auto& a : ntp.agents()) {
    if (a.s == a.t) continue;
    ++demand[a.s * n + a.t];
    ++demand[a.t * n + a.s];
  }
  Cost zeta = ntp.alpha() == 0 ? Cost::infinity() : Cost(Rational(1 / ntp.alpha()));
  return RdpInstance(g, std::move(demand), std::move(zeta),
                     Rational(static_cast<long>(ntp.beta())));
}

RdpEvaluation rdp_cost(const RdpInstance& rdp, const std::vector<EdgeId>& selection,
                       Objective objective) {
  const auto& g = rdp.graph();
  std::vector<bool> chosen(g.edge_count(), false);
  Rational used = 0;
  for (EdgeId e : selection) {
    if (e >= g.edge_count()) throw InvalidInstance("selection", "edge index out of range");
    if (!chosen[e]) used += g.edge(e).weight;
    chosen[e] = true;
  }
  std::vector<Cost> weights;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Cost w(g.edge(e).weight);
    weights.push_back(chosen[e] ? w : rdp.zeta() * w);
  }
  const std::size_t n = g.vertex_count();
  Cost result;
  for (VertexId u = 0; u < n; ++u) {
    bool any = false;
    for (VertexId v = u + 1; v < n; ++v) any = any || rdp.demand(u, v) > 0;
    if (!any) continue;
    const auto dist = shortest_distances(g, u, weights);
    for (VertexId v = u + 1; v < n; ++v) {
      const auto tau = rdp.demand(u, v);
      if (tau == 0) continue;
      Cost term = Cost(Rational(static_cast<unsigned long>(tau))) * dist[v];
      if (objective == Objective::kUtilitarian) {
        result += term;
      } else if (term > result) {
        result = term;
      }
    }
  }
  return {result, used <= rdp.budget()};
}

}  // namespace transit
