#include "transit/io.hpp"

#include <initializer_list>
#include <set>
#include <stdexcept>

#include "transit/errors.hpp"

namespace transit {

namespace {

std::string index_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

void check_keys(const Json& obj, std::initializer_list<std::string_view> required,
                std::initializer_list<std::string_view> optional = {}) {
  if (!obj.is_object()) throw InvalidInstance("$", "expected a JSON object");
  for (auto key : required) {
    if (!obj.contains(std::string(key))) throw InvalidInstance(std::string(key), "missing field");
  }
  for (const auto& item : obj.items()) {
    bool known = false;
    for (auto key : required) known = known || item.key() == key;
    for (auto key : optional) known = known || item.key() == key;
    if (!known) throw InvalidInstance(item.key(), "unknown field");
  }
}

const Json& read_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InvalidInstance(path, "expected an array");
  return j;
}

const Json& read_tuple(const Json& j, const std::string& path, std::size_t size) {
  if (!j.is_array() || j.size() != size) {
    throw InvalidInstance(path, "expected an array of " + std::to_string(size) + " entries");
  }
  return j;
}

std::string read_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw InvalidInstance(path, "expected a string");
  return j.get<std::string>();
}

Rational read_rational(const Json& j, const std::string& path) {
  std::string text;
  if (j.is_number()) {
    text = j.dump();
  } else if (j.is_string()) {
    text = j.get<std::string>();
  } else {
    throw InvalidInstance(path, "expected a rational (integer or \"p/q\" string)");
  }
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw InvalidInstance(path, "not a rational: '" + text + "'");
  }
}

Cost read_cost(const Json& j, const std::string& path) {
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    try {
      return parse_cost(text);
    } catch (const std::invalid_argument&) {
      throw InvalidInstance(path, "not a rational or \"inf\": '" + text + "'");
    }
  }
  return read_rational(j, path);
}

std::size_t read_count(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_number_integer()) throw InvalidInstance(path, "must be non-negative");
  throw InvalidInstance(path, "expected a non-negative integer");
}

std::vector<std::string> read_names(const Json& j, const std::string& path) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < read_array(j, path).size(); ++i) {
    names.push_back(read_string(j[i], index_path(path, i)));
  }
  return names;
}

Graph read_graph(const Json& obj) {
  auto names = read_names(obj["vertices"], "vertices");
  std::vector<NamedEdge> edges;
  const Json& arr = read_array(obj["edges"], "edges");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = index_path("edges", i);
    const Json& e = read_tuple(arr[i], p, 3);
    edges.push_back({read_string(e[0], index_path(p, 0)), read_string(e[1], index_path(p, 1)),
                     read_rational(e[2], index_path(p, 2))});
  }
  return Graph(std::move(names), edges);
}

VertexId read_vertex(const Graph& g, const Json& j, const std::string& path) {
  const auto name = read_string(j, path);
  auto v = g.find(name);
  if (!v) throw InvalidInstance(path, "unknown vertex '" + name + "'");
  return *v;
}

PtpInstance read_ptp(const Json& obj) {
  check_keys(obj, {"model", "stops", "agents", "alpha", "beta"});
  std::vector<Rational> stops;
  const Json& s = read_array(obj["stops"], "stops");
  for (std::size_t i = 0; i < s.size(); ++i) stops.push_back(read_rational(s[i], index_path("stops", i)));
  std::vector<PtpAgent> agents;
  const Json& a = read_array(obj["agents"], "agents");
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string p = index_path("agents", i);
    const Json& pair = read_tuple(a[i], p, 2);
    agents.push_back({read_rational(pair[0], index_path(p, 0)), read_rational(pair[1], index_path(p, 1))});
  }
  return PtpInstance(std::move(stops), std::move(agents), read_rational(obj["alpha"], "alpha"),
                     read_count(obj["beta"], "beta"));
}

NtpInstance read_ntp(const Json& obj) {
  check_keys(obj, {"model", "vertices", "edges", "agents", "alpha", "beta"});
  Graph g = read_graph(obj);
  std::vector<NtpAgent> agents;
  const Json& a = read_array(obj["agents"], "agents");
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string p = index_path("agents", i);
    const Json& pair = read_tuple(a[i], p, 2);
    agents.push_back({read_vertex(g, pair[0], index_path(p, 0)), read_vertex(g, pair[1], index_path(p, 1))});
  }
  return NtpInstance(std::move(g), std::move(agents), read_rational(obj["alpha"], "alpha"),
                     read_count(obj["beta"], "beta"));
}

RdpInstance read_rdp(const Json& obj) {
  check_keys(obj, {"model", "vertices", "edges", "demand", "zeta", "budget"});
  Graph g = read_graph(obj);
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> demand(n * n, 0);
  std::set<std::pair<VertexId, VertexId>> seen;
  const Json& d = read_array(obj["demand"], "demand");
  for (std::size_t i = 0; i < d.size(); ++i) {
    const std::string p = index_path("demand", i);
    const Json& row = read_tuple(d[i], p, 3);
    VertexId u = read_vertex(g, row[0], index_path(p, 0));
    VertexId v = read_vertex(g, row[1], index_path(p, 1));
    if (u == v) throw InvalidInstance(p, "demand between a vertex and itself");
    if (!seen.insert(std::minmax(u, v)).second) throw InvalidInstance(p, "duplicate vertex pair");
    const auto tau = read_count(row[2], index_path(p, 2));
    demand[u * n + v] = tau;
    demand[v * n + u] = tau;
  }
  return RdpInstance(std::move(g), std::move(demand), read_cost(obj["zeta"], "zeta"),
                     read_rational(obj["budget"], "budget"));
}

SetCoverInstance read_setcover(const Json& obj) {
  check_keys(obj, {"model", "universe", "subsets", "rho"});
  auto universe = read_names(obj["universe"], "universe");
  std::vector<std::vector<std::string>> subsets;
  const Json& s = read_array(obj["subsets"], "subsets");
  for (std::size_t i = 0; i < s.size(); ++i) subsets.push_back(read_names(s[i], index_path("subsets", i)));
  return SetCoverInstance(std::move(universe), std::move(subsets), read_count(obj["rho"], "rho"));
}

VertexCoverInstance read_vertexcover(const Json& obj) {
  check_keys(obj, {"model", "vertices", "edges", "rho"});
  auto vertices = read_names(obj["vertices"], "vertices");
  std::vector<std::pair<std::string, std::string>> edges;
  const Json& e = read_array(obj["edges"], "edges");
  for (std::size_t i = 0; i < e.size(); ++i) {
    const std::string p = index_path("edges", i);
    const Json& pair = read_tuple(e[i], p, 2);
    edges.emplace_back(read_string(pair[0], index_path(p, 0)), read_string(pair[1], index_path(p, 1)));
  }
  return VertexCoverInstance(std::move(vertices), std::move(edges), read_count(obj["rho"], "rho"));
}

Json graph_vertices(const Graph& g) {
  Json out = Json::array();
  for (const auto& name : g.names()) out.push_back(name);
  return out;
}

Json graph_edges(const Graph& g) {
  Json out = Json::array();
  for (const auto& e : g.edges()) out.push_back({g.name(e.u), g.name(e.v), to_json(e.weight)});
  return out;
}

struct Emitter {
  Json operator()(const PtpInstance& x) const {
    Json out;
    out["model"] = "ptp";
    out["stops"] = Json::array();
    for (const auto& s : x.stops()) out["stops"].push_back(to_json(s));
    out["agents"] = Json::array();
    for (const auto& a : x.agents()) out["agents"].push_back({to_json(a.s), to_json(a.t)});
    out["alpha"] = to_json(x.alpha());
    out["beta"] = x.beta();
    return out;
  }
  Json operator()(const NtpInstance& x) const {
    const Graph& g = x.graph();
    Json out;
    out["model"] = "ntp";
    out["vertices"] = graph_vertices(g);
    out["edges"] = graph_edges(g);
    out["agents"] = Json::array();
    for (const auto& a : x.agents()) out["agents"].push_back({g.name(a.s), g.name(a.t)});
    out["alpha"] = to_json(x.alpha());
    out["beta"] = x.beta();
    return out;
  }
  Json operator()(const RdpInstance& x) const {
    const Graph& g = x.graph();
    Json out;
    out["model"] = "rdp";
    out["vertices"] = graph_vertices(g);
    out["edges"] = graph_edges(g);
    out["demand"] = Json::array();
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
        if (x.demand(u, v) > 0) out["demand"].push_back({g.name(u), g.name(v), x.demand(u, v)});
      }
    }
    out["zeta"] = to_json(x.zeta());
    out["budget"] = to_json(x.budget());
    return out;
  }
  Json operator()(const SetCoverInstance& x) const {
    Json out;
    out["model"] = "setcover";
    out["universe"] = x.universe();
    out["subsets"] = x.subsets();
    out["rho"] = x.rho();
    return out;
  }
  Json operator()(const VertexCoverInstance& x) const {
    Json out;
    out["model"] = "vertexcover";
    out["vertices"] = x.vertices();
    out["edges"] = Json::array();
    for (const auto& [u, v] : x.edges()) out["edges"].push_back({u, v});
    out["rho"] = x.rho();
    return out;
  }
};

}  // namespace

std::string_view model_name(const AnyInstance& instance) {
  static constexpr std::string_view kNames[] = {"ptp", "ntp", "rdp", "setcover", "vertexcover"};
  return kNames[instance.index()];
}

AnyInstance parse_instance(const Json& json) {
  if (!json.is_object()) throw InvalidInstance("$", "expected a JSON object");
  if (!json.contains("model")) throw InvalidInstance("model", "missing field");
  const auto model = read_string(json["model"], "model");
  if (model == "ptp") return read_ptp(json);
  if (model == "ntp") return read_ntp(json);
  if (model == "rdp") return read_rdp(json);
  if (model == "setcover") return read_setcover(json);
  if (model == "vertexcover") return read_vertexcover(json);
  throw InvalidInstance("model", "unknown model '" + model + "'");
}

AnyInstance parse_instance(std::string_view text) {
  Json json;
  try {
    json = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InvalidInstance("$", std::string("malformed JSON: ") + e.what());
  }
  return parse_instance(json);
}

PtpInstance parse_ptp(std::string_view text) {
  auto any = parse_instance(text);
  if (auto* p = std::get_if<PtpInstance>(&any)) return std::move(*p);
  throw InvalidInstance("model", "expected model 'ptp', got '" + std::string(model_name(any)) + "'");
}

NtpInstance parse_ntp(std::string_view text) {
  auto any = parse_instance(text);
  if (auto* p = std::get_if<NtpInstance>(&any)) return std::move(*p);
  throw InvalidInstance("model", "expected model 'ntp', got '" + std::string(model_name(any)) + "'");
}

Json to_json(const Rational& value) { return to_string(value); }
Json to_json(const Cost& value) { return to_string(value); }

Json to_json(const AnyInstance& instance) { return std::visit(Emitter{}, instance); }

std::string emit_instance(const AnyInstance& instance) { return to_json(instance).dump(2) + "\n"; }

Json to_json(const ResultRecord& record, const AnyInstance& instance) {
  const Solution& s = record.solution;
  Json out;
  out["instance"] = record.instance_id;
  out["model"] = model_name(instance);
  out["solver"] = record.solver;
  out["objective"] = to_string(s.objective);
  out["cost"] = to_json(s.cost());
  out["feasible"] = s.feasible;
  out["selection"] = s.selection;
  Json labels = Json::array();
  if (const auto* ptp = std::get_if<PtpInstance>(&instance)) {
    for (auto i : s.selection) labels.push_back(to_json(ptp->stops().at(i)));
  } else if (const auto* ntp = std::get_if<NtpInstance>(&instance)) {
    const Graph& g = ntp->graph();
    for (auto e : s.selection) labels.push_back({g.name(g.edge(e).u), g.name(g.edge(e).v)});
  }
  out["selected"] = std::move(labels);
  out["per_agent_costs"] = Json::array();
  for (const auto& c : s.per_agent_costs) out["per_agent_costs"].push_back(to_json(c));
  out["egalitarian"] = to_json(s.max);
  out["utilitarian"] = to_json(s.total);
  return out;
}

Json to_json(const OracleReport& report) {
  Json out;
  out["objective"] = to_string(report.objective);
  out["optimum"] = to_json(report.optimum);
  out["witnesses"] = report.witnesses;
  out["explored"] = report.explored;
  return out;
}

}  // namespace transit
