#include "transit/instance.hpp"

#include <stdexcept>

#include "transit/errors.hpp"

namespace transit {

namespace {

void check_alpha(const Rational& alpha) {
  if (alpha < 0 || alpha >= 1) throw InvalidInstance("alpha", "alpha must lie in [0,1)");
}

}  // namespace

std::string_view to_string(Objective objective) {
  return objective == Objective::kEgalitarian ? "eg" : "ut";
}

Objective parse_objective(std::string_view text) {
  if (text == "eg" || text == "egalitarian") return Objective::kEgalitarian;
  if (text == "ut" || text == "utilitarian") return Objective::kUtilitarian;
  throw std::invalid_argument("unknown objective '" + std::string(text) + "'");
}

PtpInstance::PtpInstance(std::vector<Rational> stops, std::vector<PtpAgent> agents,
                         Rational alpha, std::size_t beta)
    : stops_(std::move(stops)), agents_(std::move(agents)), alpha_(std::move(alpha)), beta_(beta) {
  for (std::size_t i = 1; i < stops_.size(); ++i) {
    if (!(stops_[i - 1] < stops_[i])) {
      throw InvalidInstance("stops[" + std::to_string(i) + "]",
                            "stops must be strictly increasing");
    }
  }
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    if (agents_[i].t < agents_[i].s) {
      throw InvalidInstance("agents[" + std::to_string(i) + "]", "agent must satisfy s <= t");
    }
  }
  check_alpha(alpha_);
}

NtpInstance::NtpInstance(Graph graph, std::vector<NtpAgent> agents, Rational alpha,
                         std::size_t beta)
    : graph_(std::move(graph)), agents_(std::move(agents)), alpha_(std::move(alpha)), beta_(beta) {
  if (!graph_.connected()) throw InvalidInstance("edges", "graph must be connected");
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    if (!graph_.contains(agents_[i].s) || !graph_.contains(agents_[i].t)) {
      throw InvalidInstance("agents[" + std::to_string(i) + "]", "terminal is not a vertex");
    }
  }
  check_alpha(alpha_);
}

NtpInstance NtpInstance::with_agents(std::vector<NtpAgent> agents) const {
  return NtpInstance(graph_, std::move(agents), alpha_, beta_);
}

NtpInstance NtpInstance::with_beta(std::size_t beta) const {
  return NtpInstance(graph_, agents_, alpha_, beta);
}

}  // namespace transit
