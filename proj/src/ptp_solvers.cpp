#include "transit/ptp_solvers.hpp"

#include <algorithm>
#include <functional>

#include "transit/errors.hpp"
#include "transit/evaluate.hpp"

namespace transit {

std::vector<Rational> terminal_set(const PtpInstance& instance) {
  std::vector<Rational> terminals;
  for (const auto& a : instance.agents()) {
    terminals.push_back(a.s);
    terminals.push_back(a.t);
  }
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  return terminals;
}

PtpInstance restrict_to_terminals(const PtpInstance& instance) {
  auto terminals = terminal_set(instance);
  for (const auto& x : terminals) {
    if (!std::binary_search(instance.stops().begin(), instance.stops().end(), x)) {
      throw Inapplicable("terminal " + to_string(x) + " is not a candidate stop");
    }
  }
  return PtpInstance(std::move(terminals), instance.agents(), instance.alpha(), instance.beta());
}

namespace {

Rational abs_diff(const Rational& a, const Rational& b) { return a < b ? Rational(b - a) : Rational(a - b); }

// Reduction in one agent's cost when stop `k` is opened directly after stop
// `h` (h < k, nothing open between them or to the right of h). With
// board(v) = |s - v| - alpha*v and alight(v) = alpha*v + |t - v|, riding from
// v1 <= v2 costs board(v1) + alight(v2).
Rational agent_gain(const PtpAgent& a, const Rational& alpha, const Rational& h,
                    const Rational& k) {
  if (a.t <= h) return 0;  // both terminals already bracketed by stops at or left of h
  const Rational walk = a.t - a.s;
  auto alight = [&](const Rational& v) { return Rational(alpha * v + abs_diff(a.t, v)); };
  if (h < a.s) {
    // Before: only stops left of s, so riding is never better than walking.
    Rational ride = abs_diff(a.s, h) - alpha * h + alight(k);
    return ride < walk ? Rational(walk - ride) : Rational(0);
  }
  // s <= h < t: the best boarding stop is unaffected; only alighting can improve.
  Rational before = alight(h);
  Rational after = alight(k);
  return after < before ? Rational(before - after) : Rational(0);
}

}  // namespace

Solution ptp_utilitarian_dp(const PtpInstance& instance) {
  const auto& stops = instance.stops();
  const std::size_t m = stops.size();
  const std::size_t beta = std::min(instance.beta(), m);

  // gain[h][k]: total reduction from opening k right after h.
  std::vector<std::vector<Rational>> gain(m, std::vector<Rational>(m, 0));
  for (std::size_t h = 0; h < m; ++h) {
    for (std::size_t k = h + 1; k < m; ++k) {
      for (const auto& a : instance.agents()) {
        gain[h][k] += agent_gain(a, instance.alpha(), stops[h], stops[k]);
      }
    }
  }

  // best[r][h]: largest reduction from a chain that starts at h and opens at
  // most r further stops to its right.
  std::vector<std::vector<Rational>> best(beta, std::vector<Rational>(m, 0));
  for (std::size_t r = 1; r < beta; ++r) {
    for (std::size_t h = 0; h < m; ++h) {
      for (std::size_t k = h + 1; k < m; ++k) {
        Rational c = gain[h][k] + best[r - 1][k];
        if (c > best[r][h]) best[r][h] = c;
      }
    }
  }

  std::vector<std::size_t> chosen;
  if (beta >= 2) {
    Rational optimum = 0;
    for (std::size_t h = 0; h < m; ++h) {
      if (best[beta - 1][h] > optimum) optimum = best[beta - 1][h];
    }
    if (optimum > 0) {
      // Lexicographically smallest optimal chain: smallest admissible first
      // stop, then stop as soon as the remaining reduction is zero.
      std::size_t h = 0;
      while (best[beta - 1][h] != optimum) ++h;
      chosen.push_back(h);
      Rational remaining = optimum;
      for (std::size_t r = beta - 1; r > 0 && remaining > 0; --r) {
        std::size_t k = h + 1;
        while (gain[h][k] + best[r - 1][k] != remaining) ++k;
        remaining -= gain[h][k];
        chosen.push_back(k);
        h = k;
      }
    }
  }
  return evaluate(instance, chosen, Objective::kUtilitarian);
}

Solution ptp_egalitarian_exact(const PtpInstance& instance) {
  const std::size_t m = instance.stops().size();
  const std::size_t beta = std::min(instance.beta(), m);

  Rational lower_bound = 0;
  for (const auto& a : instance.agents()) {
    Rational bound = instance.alpha() * (a.t - a.s);
    if (bound > lower_bound) lower_bound = bound;
  }

  std::vector<std::size_t> incumbent;
  Rational incumbent_cost = objective_cost(instance, incumbent, Objective::kEgalitarian);
  std::vector<std::size_t> current;
  bool settled = incumbent_cost == lower_bound;

  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    if (settled || current.size() == beta) return;
    for (std::size_t i = start; i < m && !settled; ++i) {
      current.push_back(i);
      Rational c = objective_cost(instance, current, Objective::kEgalitarian);
      if (c < incumbent_cost) {
        incumbent_cost = c;
        incumbent = current;
        settled = c == lower_bound;
      }
      extend(i + 1);
      current.pop_back();
    }
  };
  extend(0);
  return evaluate(instance, incumbent, Objective::kEgalitarian);
}

}  // namespace transit
