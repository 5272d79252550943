#include "transit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iterator>
#include <optional>
#include <sstream>

#include "transit/budget_dijkstra.hpp"
#include "transit/errors.hpp"
#include "transit/evaluate.hpp"
#include "transit/greedy.hpp"
#include "transit/io.hpp"
#include "transit/multi_agent.hpp"
#include "transit/oracles.hpp"
#include "transit/ptp_solvers.hpp"
#include "transit/reductions.hpp"

namespace transit::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string in;
  std::string out;
  std::string objective = "eg";
  std::string method = "auto";
  std::string alpha;
  std::string source;
  std::string epsilons;
  std::size_t agents = 0;
  std::size_t beta = 2;
  std::size_t beta_min = 2;
  std::size_t beta_max = 8;
  std::size_t witnesses = 16;
  std::string timing;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::string instance_id(const std::string& path) {
  return path == "-" ? "stdin" : std::filesystem::path(path).stem().string();
}

AnyInstance load(const std::string& path) { return parse_instance(std::string_view(read_input(path))); }

template <typename T>
T load_as(const std::string& path, std::string_view model) {
  auto any = load(path);
  if (auto* p = std::get_if<T>(&any)) return std::move(*p);
  throw InvalidInstance("model", "expected model '" + std::string(model) + "', got '" +
                                     std::string(model_name(any)) + "'");
}

// Writes to --out when given, otherwise to stdout.
void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + opt.out + "'");
  file << text;
}

std::uint64_t oracle_cap() {
  const char* env = std::getenv("TRANSIT_ORACLE_CAP");
  if (env == nullptr || *env == '\0') return kDefaultOracleCap;
  try {
    std::size_t used = 0;
    const auto cap = std::stoull(env, &used);
    if (used != std::string_view(env).size()) throw std::invalid_argument("trailing text");
    return cap;
  } catch (const std::exception&) {
    throw UsageError(std::string("TRANSIT_ORACLE_CAP is not a non-negative integer: ") + env);
  }
}

std::string record_text(const std::string& id, const std::string& solver, const Solution& s,
                        const AnyInstance& instance, const Json& extra = Json::object()) {
  Json j = to_json(ResultRecord{id, solver, s}, instance);
  for (const auto& item : extra.items()) j[item.key()] = item.value();
  return j.dump(2) + "\n";
}

Json trajectory_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

std::string solver_label(std::string_view family, std::string_view method) {
  return std::string(family) + "-" + std::string(method);
}

void solve_ptp(const Options& opt, std::ostream& out) {
  const AnyInstance any = load_as<PtpInstance>(opt.in, "ptp");
  const auto& instance = std::get<PtpInstance>(any);
  const Objective objective = parse_objective(opt.objective);
  std::string method = opt.method;
  if (method == "auto") method = objective == Objective::kUtilitarian ? "dp" : "exact";
  Solution s;
  if (method == "dp") {
    if (objective != Objective::kUtilitarian) throw UsageError("--method dp needs --objective ut");
    s = ptp_utilitarian_dp(instance);
  } else if (method == "exact") {
    if (objective != Objective::kEgalitarian) {
      throw UsageError("--method exact is the egalitarian search; use dp for ut");
    }
    s = ptp_egalitarian_exact(instance);
  } else if (method == "baseline") {
    s = trivial_baseline(instance, objective);
  } else if (method == "oracle") {
    auto report = oracle_ptp(instance, objective, 1, oracle_cap());
    s = evaluate(instance, report.witnesses.front(), objective);
  } else {
    throw UsageError("unknown method '" + method + "' for ptp");
  }
  emit(opt, record_text(instance_id(opt.in), solver_label("ptp", method), s, any), out);
}

void solve_ntp(const Options& opt, std::ostream& out) {
  auto instance = load_as<NtpInstance>(opt.in, "ntp");
  if (opt.agents > 0) {
    if (opt.agents > instance.agents().size()) {
      throw UsageError("--agents exceeds the " + std::to_string(instance.agents().size()) +
                       " agents in the file");
    }
    std::vector<NtpAgent> first(instance.agents().begin(),
                                instance.agents().begin() + static_cast<std::ptrdiff_t>(opt.agents));
    instance = instance.with_agents(std::move(first));
  }
  const Objective objective = parse_objective(opt.objective);
  std::string method = opt.method;
  if (method == "auto") method = "exact";
  Solution s;
  Json extra = Json::object();
  if (method == "exact") {
    const auto k = instance.agents().size();
    if (k == 1) {
      s = solve_one_agent(instance, objective);
    } else if (k == 2) {
      auto result = solve_two_agents_detailed(instance, objective);
      s = std::move(result.solution);
      const auto& d = result.decomposition;
      Json dec;
      dec["disjoint"] = d.disjoint;
      if (!d.disjoint) {
        dec["p"] = instance.graph().name(d.p);
        dec["q"] = instance.graph().name(d.q);
        dec["order"] = d.order;
      }
      extra["decomposition"] = std::move(dec);
    } else {
      throw AgentCount("exact NTP solving supports 1 or 2 agents, got " + std::to_string(k) +
                       "; use `oracle ntp` or --method baseline");
    }
  } else if (method == "baseline") {
    s = trivial_baseline(instance, objective);
  } else if (method == "oracle") {
    auto report = oracle_ntp(instance, objective, 1, oracle_cap());
    s = evaluate(instance, report.witnesses.front(), objective);
  } else {
    throw UsageError("unknown method '" + method + "' for ntp");
  }
  emit(opt, record_text(instance_id(opt.in), solver_label("ntp", method), s, AnyInstance(instance), extra),
       out);
}

void run_greedy(const Options& opt, bool up, std::ostream& out) {
  const AnyInstance any = load_as<NtpInstance>(opt.in, "ntp");
  const auto& instance = std::get<NtpInstance>(any);
  const Objective objective = parse_objective(opt.objective);
  GreedyResult r = up ? greedy_up(instance, objective) : greedy_down(instance, objective);
  Json extra;
  extra["trajectory"] = trajectory_json(r.trajectory);
  if (!up) extra["clamped"] = r.clamped;
  emit(opt, record_text(instance_id(opt.in), up ? "greedy-up" : "greedy-down", r.solution, any, extra),
       out);
}

void run_oracle(const Options& opt, bool ptp, std::ostream& out) {
  const Objective objective = parse_objective(opt.objective);
  const auto cap = oracle_cap();
  OracleReport report;
  if (ptp) {
    report = oracle_ptp(load_as<PtpInstance>(opt.in, "ptp"), objective, opt.witnesses, cap);
  } else {
    report = oracle_ntp(load_as<NtpInstance>(opt.in, "ntp"), objective, opt.witnesses, cap);
  }
  Json j;
  j["instance"] = instance_id(opt.in);
  j["solver"] = ptp ? "oracle-ptp" : "oracle-ntp";
  const Json body = to_json(report);
  for (const auto& item : body.items()) j[item.key()] = item.value();
  emit(opt, j.dump(2) + "\n", out);
}

void run_reduce(const Options& opt, bool setcover, std::ostream& out) {
  Json j;
  AnyInstance produced = [&]() -> AnyInstance {
    if (setcover) {
      if (opt.alpha.empty()) throw UsageError("reduce setcover needs --alpha");
      auto r = setcover_to_ntp(load_as<SetCoverInstance>(opt.in, "setcover"), parse_rational(opt.alpha));
      j["kappa_eg"] = to_json(r.kappa_eg);
      j["kappa_ut"] = to_json(r.kappa_ut);
      return std::move(r.instance);
    }
    auto r = vertexcover_to_ptp(load_as<VertexCoverInstance>(opt.in, "vertexcover"));
    j["kappa"] = to_json(r.kappa);
    return std::move(r.instance);
  }();
  if (opt.out.empty()) {
    j["instance"] = to_json(produced);
  } else {
    emit(opt, emit_instance(produced), out);
    j["out"] = opt.out;
  }
  out << j.dump(2) << "\n";
}

void run_convert(const Options& opt, std::ostream& out) {
  const auto rdp = ntp_to_rdp(load_as<NtpInstance>(opt.in, "ntp"));
  emit(opt, emit_instance(rdp), out);
}

AdversarialInstance adversarial_from(const Options& opt, std::size_t beta) {
  const Rational alpha = parse_rational(opt.alpha.empty() ? "1/2" : opt.alpha);
  AdversarialParams params = canonical_adversarial_params(alpha, beta);
  if (!opt.epsilons.empty()) {
    params.epsilons.clear();
    std::stringstream ss(opt.epsilons);
    std::string item;
    while (std::getline(ss, item, ',')) params.epsilons.push_back(parse_rational(item));
  }
  return make_adversarial(params);
}

Json edge_list(const Graph& g, const std::vector<EdgeId>& ids) {
  Json out = Json::array();
  for (auto e : ids) out.push_back({g.name(g.edge(e).u), g.name(g.edge(e).v)});
  return out;
}

// Same layout as `reduce`: the instance goes to --out when given, the
// reference selections always go to stdout.
void run_gen(const Options& opt, std::ostream& out) {
  const auto adv = adversarial_from(opt, opt.beta);
  const Graph& g = adv.instance.graph();
  Json j;
  j["greedy_reference"] = adv.greedy_reference;
  j["greedy_reference_edges"] = edge_list(g, adv.greedy_reference);
  j["motorway_reference"] = adv.motorway_reference;
  j["motorway_reference_edges"] = edge_list(g, adv.motorway_reference);
  if (opt.out.empty()) {
    j["instance"] = to_json(AnyInstance(adv.instance));
  } else {
    emit(opt, emit_instance(adv.instance), out);
    j["out"] = opt.out;
  }
  out << j.dump(2) << "\n";
}

void run_trace(const Options& opt, std::ostream& out) {
  const auto instance = load_as<NtpInstance>(opt.in, "ntp");
  const Graph& g = instance.graph();
  VertexId source = 0;
  if (!opt.source.empty()) {
    source = g.vertex(opt.source);
  } else if (!instance.agents().empty()) {
    source = instance.agents().front().s;
  }
  std::vector<TraceStep> steps;
  const BudgetTable table = budget_dijkstra(instance, source, &steps);
  const std::size_t cols = table.effective_budget() + 1;

  std::vector<Cost> state(g.vertex_count() * cols, Cost::infinity());
  std::ostringstream csv;
  csv << "iteration,pivot,vertex";
  for (std::size_t b = 0; b < cols; ++b) csv << ",b" << b;
  csv << "\n";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    std::vector<bool> touched(state.size(), false);
    for (const auto& u : steps[i].updates) {
      state[u.pair.vertex * cols + u.pair.budget] = u.value;
      touched[u.pair.vertex * cols + u.pair.budget] = true;
    }
    const auto& pivot = steps[i].pivot;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (v == source) continue;
      csv << i + 1 << ",(" << g.name(pivot.vertex) << ";" << pivot.budget << ")," << g.name(v);
      for (std::size_t b = 0; b < cols; ++b) {
        csv << "," << to_string(state[v * cols + b]) << (touched[v * cols + b] ? "*" : "");
      }
      csv << "\n";
    }
  }
  emit(opt, csv.str(), out);
}

std::string decimal(const Rational& r) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << r.get_d();
  return s.str();
}

void run_bench(const Options& opt, std::ostream& out) {
  if (opt.beta_min < 1 || opt.beta_min > opt.beta_max) throw UsageError("need 1 <= --beta-min <= --beta-max");
  std::ostringstream csv;
  csv << "beta,alpha,eps0,greedy_up,greedy_down,motorway,ratio,ratio_decimal,bound\n";
  for (std::size_t beta = opt.beta_min; beta <= opt.beta_max; ++beta) {
    Options local = opt;
    local.epsilons.clear();
    const auto adv = adversarial_from(local, beta);
    const auto& inst = adv.instance;
    const auto up = greedy_up(inst, Objective::kEgalitarian).solution.max;
    const auto down = greedy_down(inst, Objective::kEgalitarian).solution.max;
    const auto motorway = objective_cost(inst, adv.motorway_reference, Objective::kEgalitarian);
    const Rational worst = std::max(up, down);
    const Rational ratio = motorway / worst;
    const Rational bound = (3 + inst.alpha() * static_cast<long>(beta)) / Rational(static_cast<long>(beta));
    csv << beta << "," << to_string(inst.alpha()) << ","
        << to_string(canonical_adversarial_params(inst.alpha(), beta).epsilons[0]) << ","
        << to_string(up) << "," << to_string(down) << "," << to_string(motorway) << ","
        << to_string(ratio) << "," << decimal(ratio) << "," << to_string(bound) << "\n";
  }
  emit(opt, csv.str(), out);
}

void add_in(CLI::App* app, Options& opt) {
  app->add_option("--in", opt.in, "Instance file (JSON), '-' for stdin")->required();
}

void add_objective(CLI::App* app, Options& opt) {
  app->add_option("--objective", opt.objective, "eg or ut")
      ->check(CLI::IsMember({"eg", "ut", "egalitarian", "utilitarian"}));
}

void add_out(CLI::App* app, Options& opt) {
  app->add_option("--out", opt.out, "Write output to this file instead of stdout");
}

int exit_code_for(const std::exception& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  if (dynamic_cast<const TooLarge*>(&e) || dynamic_cast<const Inapplicable*>(&e) ||
      dynamic_cast<const AgentCount*>(&e) || dynamic_cast<const NoPath*>(&e)) {
    return kGuard;
  }
  return kInputError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Budget-constrained transit investment solvers", "transit"};
  app.require_subcommand(1);
  app.add_option("--timing", opt.timing, "Append wall-clock timing to this log file");

  std::function<void()> action;
  auto bind = [&](CLI::App* sub, std::function<void()> f) {
    sub->callback([&action, f = std::move(f)] { action = f; });
  };

  auto* solve = app.add_subcommand("solve", "Exact or baseline solvers");
  solve->require_subcommand(1);
  auto* solve_p = solve->add_subcommand("ptp", "Stop placement on a line");
  add_in(solve_p, opt);
  add_objective(solve_p, opt);
  add_out(solve_p, opt);
  solve_p->add_option("--method", opt.method, "auto, dp, exact, baseline or oracle");
  bind(solve_p, [&] { solve_ptp(opt, out); });
  auto* solve_n = solve->add_subcommand("ntp", "Edge discounting in a graph");
  add_in(solve_n, opt);
  add_objective(solve_n, opt);
  add_out(solve_n, opt);
  solve_n->add_option("--agents", opt.agents, "Keep only the first N agents");
  solve_n->add_option("--method", opt.method, "auto, exact, baseline or oracle");
  bind(solve_n, [&] { solve_ntp(opt, out); });

  auto* greedy = app.add_subcommand("greedy", "Greedy heuristics on NTP instances");
  greedy->require_subcommand(1);
  for (bool up : {true, false}) {
    auto* sub = greedy->add_subcommand(up ? "up" : "down", up ? "Add edges one by one" : "Remove edges one by one");
    add_in(sub, opt);
    add_objective(sub, opt);
    add_out(sub, opt);
    bind(sub, [&, up] { run_greedy(opt, up, out); });
  }

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive optimum (TRANSIT_ORACLE_CAP bounds the search)");
  oracle_cmd->require_subcommand(1);
  for (bool ptp : {true, false}) {
    auto* sub = oracle_cmd->add_subcommand(ptp ? "ptp" : "ntp");
    add_in(sub, opt);
    add_objective(sub, opt);
    add_out(sub, opt);
    sub->add_option("--witnesses", opt.witnesses, "Maximum optimal selections to list");
    bind(sub, [&, ptp] { run_oracle(opt, ptp, out); });
  }

  auto* reduce = app.add_subcommand("reduce", "Build hardness gadget instances");
  reduce->require_subcommand(1);
  auto* red_sc = reduce->add_subcommand("setcover", "SetCover to NTP");
  add_in(red_sc, opt);
  add_out(red_sc, opt);
  red_sc->add_option("--alpha", opt.alpha, "Discount factor")->required();
  bind(red_sc, [&] { run_reduce(opt, true, out); });
  auto* red_vc = reduce->add_subcommand("vertexcover", "VertexCover to PTP");
  add_in(red_vc, opt);
  add_out(red_vc, opt);
  bind(red_vc, [&] { run_reduce(opt, false, out); });

  auto* convert = app.add_subcommand("convert", "Model conversions");
  convert->require_subcommand(1);
  auto* to_rdp = convert->add_subcommand("ntp-to-rdp", "Unit-weight NTP to the railway design model");
  add_in(to_rdp, opt);
  add_out(to_rdp, opt);
  bind(to_rdp, [&] { run_convert(opt, out); });

  auto* gen = app.add_subcommand("gen", "Instance generators");
  gen->require_subcommand(1);
  auto* adv = gen->add_subcommand("adversarial", "Motorway family defeating both greedy heuristics");
  adv->add_option("--alpha", opt.alpha, "Discount factor (default 1/2)");
  adv->add_option("--beta", opt.beta, "Budget")->required();
  adv->add_option("--epsilons", opt.epsilons, "Comma-separated eps_0..eps_beta");
  add_out(adv, opt);
  bind(adv, [&] { run_gen(opt, out); });

  auto* trace = app.add_subcommand("trace", "Algorithm traces");
  trace->require_subcommand(1);
  auto* dijkstra = trace->add_subcommand("dijkstra", "Per-iteration table of the budget Dijkstra as CSV");
  add_in(dijkstra, opt);
  add_out(dijkstra, opt);
  dijkstra->add_option("--source", opt.source, "Source vertex (default: first agent's origin)");
  bind(dijkstra, [&] { run_trace(opt, out); });

  auto* bench = app.add_subcommand("bench", "Benchmarks");
  bench->require_subcommand(1);
  auto* ratio = bench->add_subcommand("greedy-ratio", "Motorway vs greedy cost over a range of budgets");
  ratio->add_option("--alpha", opt.alpha, "Discount factor (default 1/2)");
  ratio->add_option("--beta-min", opt.beta_min, "Smallest budget");
  ratio->add_option("--beta-max", opt.beta_max, "Largest budget");
  add_out(ratio, opt);
  bind(ratio, [&] { run_bench(opt, out); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    action();
  } catch (const std::exception& e) {
    code = exit_code_for(e, err);
  }
  if (!opt.timing.empty()) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::ofstream log(opt.timing, std::ios::app);
    std::string joined;
    for (const auto& a : args) joined += (joined.empty() ? "" : " ") + a;
    log << joined << "\t" << std::fixed << std::setprecision(6) << elapsed.count() << "s\texit "
        << code << "\n";
  }
  return code;
}

}  // namespace transit::cli
