#pragma once

#include <vector>

#include "transit/instance.hpp"

namespace transit {

/// Sorted, deduplicated agent terminals.
std::vector<Rational> terminal_set(const PtpInstance& instance);

/// Replaces the candidate stops by the terminal set. Preserves the utilitarian
/// optimum only; the egalitarian optimum may get worse. Throws Inapplicable
/// unless every terminal is already a candidate stop.
PtpInstance restrict_to_terminals(const PtpInstance& instance);

/// Exact utilitarian optimum by dynamic programming over stops in left-to-right
/// order. Opening stop k right after stop h changes the total cost by an amount
/// that depends only on (h, k), so the state is (last opened stop, stops used).
Solution ptp_utilitarian_dp(const PtpInstance& instance);

/// Exact egalitarian optimum by enumerating stop subsets of size <= beta in
/// lexicographic order, stopping early once the alpha * max-walking-cost lower
/// bound is met. Ties resolve to the lexicographically smallest stop set.
Solution ptp_egalitarian_exact(const PtpInstance& instance);

}  // namespace transit
