#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

#include "transit/budget_dijkstra.hpp"
#include "transit/errors.hpp"
#include "transit/evaluate.hpp"
#include "transit/greedy.hpp"
#include "transit/io.hpp"
#include "transit/multi_agent.hpp"
#include "transit/oracles.hpp"
#include "transit/ptp_solvers.hpp"
#include "transit/reductions.hpp"

namespace py = pybind11;
using namespace transit;

namespace {

// Python values cross the boundary as fractions.Fraction; anything whose str()
// parses as a rational is accepted on the way in.
Rational to_rational(const py::handle& value) {
  return parse_rational(py::str(value).cast<std::string>());
}

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(to_string(r));
}

py::object cost_value(const Cost& c) {
  if (c.is_infinite()) return py::float_(std::numeric_limits<double>::infinity());
  return fraction(c.value());
}

py::list fractions(const std::vector<Rational>& values) {
  py::list out;
  for (const auto& v : values) out.append(fraction(v));
  return out;
}

Objective objective_of(const std::string& text) { return parse_objective(text); }

py::dict solution_dict(const Solution& s) {
  py::dict d;
  d["selection"] = s.selection;
  d["per_agent_costs"] = fractions(s.per_agent_costs);
  d["egalitarian"] = fraction(s.max);
  d["utilitarian"] = fraction(s.total);
  d["objective"] = std::string(to_string(s.objective));
  d["cost"] = fraction(s.cost());
  d["feasible"] = s.feasible;
  return d;
}

py::dict greedy_dict(const GreedyResult& r) {
  py::dict d = solution_dict(r.solution);
  d["trajectory"] = fractions(r.trajectory);
  d["clamped"] = r.clamped;
  return d;
}

py::dict oracle_dict(const OracleReport& r) {
  py::dict d;
  d["optimum"] = fraction(r.optimum);
  d["witnesses"] = r.witnesses;
  d["explored"] = r.explored;
  d["objective"] = std::string(to_string(r.objective));
  return d;
}

py::object to_python(AnyInstance any) {
  return std::visit([](auto&& x) -> py::object { return py::cast(std::move(x)); }, std::move(any));
}

std::string to_json_text(const AnyInstance& any) { return emit_instance(any); }

NtpInstance make_ntp(const std::vector<std::string>& vertices, const py::list& edges,
                     const std::vector<std::pair<std::string, std::string>>& agents,
                     const py::handle& alpha, std::size_t beta) {
  std::vector<NamedEdge> named;
  for (const auto& e : edges) {
    auto t = e.cast<py::sequence>();
    named.push_back({t[0].cast<std::string>(), t[1].cast<std::string>(), to_rational(t[2])});
  }
  Graph g(vertices, named);
  std::vector<NtpAgent> a;
  for (const auto& [s, t] : agents) a.push_back({g.vertex(s), g.vertex(t)});
  return NtpInstance(std::move(g), std::move(a), to_rational(alpha), beta);
}

PtpInstance make_ptp(const py::list& stops, const py::list& agents, const py::handle& alpha,
                     std::size_t beta) {
  std::vector<Rational> s;
  for (const auto& x : stops) s.push_back(to_rational(x));
  std::vector<PtpAgent> a;
  for (const auto& pair : agents) {
    auto t = pair.cast<py::sequence>();
    a.push_back({to_rational(t[0]), to_rational(t[1])});
  }
  return PtpInstance(std::move(s), std::move(a), to_rational(alpha), beta);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Budget-constrained transit investment: exact solvers, greedy heuristics, oracles";

  auto base = py::register_exception<Error>(m, "TransitError", PyExc_ValueError);
  py::register_exception<InvalidInstance>(m, "InvalidInstanceError", base);
  py::register_exception<TooLarge>(m, "TooLargeError", base);
  py::register_exception<Inapplicable>(m, "InapplicableError", base);
  py::register_exception<AgentCount>(m, "AgentCountError", base);

  py::class_<PtpInstance>(m, "PtpInstance")
      .def(py::init(&make_ptp), py::arg("stops"), py::arg("agents"), py::arg("alpha"),
           py::arg("beta"))
      .def_property_readonly("stops", [](const PtpInstance& x) { return fractions(x.stops()); })
      .def_property_readonly("agents",
                             [](const PtpInstance& x) {
                               py::list out;
                               for (const auto& a : x.agents()) {
                                 out.append(py::make_tuple(fraction(a.s), fraction(a.t)));
                               }
                               return out;
                             })
      .def_property_readonly("alpha", [](const PtpInstance& x) { return fraction(x.alpha()); })
      .def_property_readonly("beta", &PtpInstance::beta)
      .def("to_json", [](const PtpInstance& x) { return to_json_text(x); })
      .def("__eq__", [](const PtpInstance& a, const PtpInstance& b) { return a == b; });

  py::class_<NtpInstance>(m, "NtpInstance")
      .def(py::init(&make_ntp), py::arg("vertices"), py::arg("edges"), py::arg("agents"),
           py::arg("alpha"), py::arg("beta"))
      .def_property_readonly("vertices", [](const NtpInstance& x) { return x.graph().names(); })
      .def_property_readonly("edges",
                             [](const NtpInstance& x) {
                               py::list out;
                               const Graph& g = x.graph();
                               for (const auto& e : g.edges()) {
                                 out.append(py::make_tuple(g.name(e.u), g.name(e.v), fraction(e.weight)));
                               }
                               return out;
                             })
      .def_property_readonly("agents",
                             [](const NtpInstance& x) {
                               py::list out;
                               for (const auto& a : x.agents()) {
                                 out.append(py::make_tuple(x.graph().name(a.s), x.graph().name(a.t)));
                               }
                               return out;
                             })
      .def_property_readonly("alpha", [](const NtpInstance& x) { return fraction(x.alpha()); })
      .def_property_readonly("beta", &NtpInstance::beta)
      .def("to_json", [](const NtpInstance& x) { return to_json_text(x); })
      .def("__eq__", [](const NtpInstance& a, const NtpInstance& b) { return a == b; });

  py::class_<RdpInstance>(m, "RdpInstance")
      .def_property_readonly("zeta", [](const RdpInstance& x) { return cost_value(x.zeta()); })
      .def_property_readonly("budget", [](const RdpInstance& x) { return fraction(x.budget()); })
      .def("demand",
           [](const RdpInstance& x, const std::string& u, const std::string& v) {
             return x.demand(x.graph().vertex(u), x.graph().vertex(v));
           })
      .def("to_json", [](const RdpInstance& x) { return to_json_text(x); });

  py::class_<SetCoverInstance>(m, "SetCoverInstance")
      .def(py::init<std::vector<std::string>, std::vector<std::vector<std::string>>, std::size_t>(),
           py::arg("universe"), py::arg("subsets"), py::arg("rho"))
      .def("to_json", [](const SetCoverInstance& x) { return to_json_text(x); });

  py::class_<VertexCoverInstance>(m, "VertexCoverInstance")
      .def(py::init<std::vector<std::string>, std::vector<std::pair<std::string, std::string>>,
                    std::size_t>(),
           py::arg("vertices"), py::arg("edges"), py::arg("rho"))
      .def("to_json", [](const VertexCoverInstance& x) { return to_json_text(x); });

  m.def("parse_instance", [](const std::string& text) { return to_python(parse_instance(std::string_view(text))); },
        py::arg("text"));

  m.def("evaluate",
        [](const PtpInstance& x, const std::vector<std::size_t>& sel, const std::string& obj) {
          return solution_dict(evaluate(x, sel, objective_of(obj)));
        },
        py::arg("instance"), py::arg("selection"), py::arg("objective") = "eg");
  m.def("evaluate",
        [](const NtpInstance& x, const std::vector<std::size_t>& sel, const std::string& obj) {
          return solution_dict(evaluate(x, sel, objective_of(obj)));
        },
        py::arg("instance"), py::arg("selection"), py::arg("objective") = "eg");

  m.def("budget_table",
        [](const NtpInstance& x, const std::string& source) {
          const auto table = budget_dijkstra(x, x.graph().vertex(source));
          py::dict out;
          for (VertexId v = 0; v < x.graph().vertex_count(); ++v) {
            py::list row;
            for (std::size_t b = 0; b <= x.beta(); ++b) row.append(cost_value(table.dist(v, b)));
            out[py::str(x.graph().name(v))] = row;
          }
          return out;
        },
        py::arg("instance"), py::arg("source"));

  m.def("solve_one_agent",
        [](const NtpInstance& x, const std::string& obj) {
          return solution_dict(solve_one_agent(x, objective_of(obj)));
        },
        py::arg("instance"), py::arg("objective") = "eg");
  m.def("solve_two_agents",
        [](const NtpInstance& x, const std::string& obj) {
          return solution_dict(solve_two_agents(x, objective_of(obj)));
        },
        py::arg("instance"), py::arg("objective") = "eg");
  m.def("trivial_baseline",
        [](const NtpInstance& x, const std::string& obj) {
          return solution_dict(trivial_baseline(x, objective_of(obj)));
        },
        py::arg("instance"), py::arg("objective") = "eg");
  m.def("trivial_baseline",
        [](const PtpInstance& x, const std::string& obj) {
          return solution_dict(trivial_baseline(x, objective_of(obj)));
        },
        py::arg("instance"), py::arg("objective") = "eg");

  m.def("greedy_up",
        [](const NtpInstance& x, const std::string& obj) { return greedy_dict(greedy_up(x, objective_of(obj))); },
        py::arg("instance"), py::arg("objective") = "eg");
  m.def("greedy_down",
        [](const NtpInstance& x, const std::string& obj) { return greedy_dict(greedy_down(x, objective_of(obj))); },
        py::arg("instance"), py::arg("objective") = "eg");
  m.def("make_adversarial",
        [](const py::handle& alpha, std::size_t beta) {
          auto adv = make_adversarial(canonical_adversarial_params(to_rational(alpha), beta));
          return py::make_tuple(adv.instance, adv.greedy_reference, adv.motorway_reference);
        },
        py::arg("alpha"), py::arg("beta"));

  m.def("ptp_utilitarian_dp", [](const PtpInstance& x) { return solution_dict(ptp_utilitarian_dp(x)); },
        py::arg("instance"));
  m.def("ptp_egalitarian_exact",
        [](const PtpInstance& x) { return solution_dict(ptp_egalitarian_exact(x)); }, py::arg("instance"));
  m.def("restrict_to_terminals", &restrict_to_terminals, py::arg("instance"));

  m.def("oracle",
        [](const PtpInstance& x, const std::string& obj, std::size_t k, std::uint64_t cap) {
          return oracle_dict(oracle_ptp(x, objective_of(obj), k, cap));
        },
        py::arg("instance"), py::arg("objective") = "eg", py::arg("max_witnesses") = 16,
        py::arg("cap") = kDefaultOracleCap);
  m.def("oracle",
        [](const NtpInstance& x, const std::string& obj, std::size_t k, std::uint64_t cap) {
          return oracle_dict(oracle_ntp(x, objective_of(obj), k, cap));
        },
        py::arg("instance"), py::arg("objective") = "eg", py::arg("max_witnesses") = 16,
        py::arg("cap") = kDefaultOracleCap);

  m.def("has_set_cover", &has_set_cover, py::arg("instance"));
  m.def("has_vertex_cover", &has_vertex_cover, py::arg("instance"));
  m.def("setcover_to_ntp",
        [](const SetCoverInstance& sc, const py::handle& alpha) {
          auto r = setcover_to_ntp(sc, to_rational(alpha));
          return py::make_tuple(r.instance, fraction(r.kappa_eg), fraction(r.kappa_ut));
        },
        py::arg("instance"), py::arg("alpha"));
  m.def("vertexcover_to_ptp",
        [](const VertexCoverInstance& vc) {
          auto r = vertexcover_to_ptp(vc);
          return py::make_tuple(r.instance, fraction(r.kappa));
        },
        py::arg("instance"));
  m.def("ntp_to_rdp", &ntp_to_rdp, py::arg("instance"));
  m.def("rdp_cost",
        [](const RdpInstance& x, const std::vector<std::size_t>& sel, const std::string& obj) {
          auto r = rdp_cost(x, sel, objective_of(obj));
          return py::make_tuple(cost_value(r.cost), r.feasible);
        },
        py::arg("instance"), py::arg("selection"), py::arg("objective") = "ut");
}
