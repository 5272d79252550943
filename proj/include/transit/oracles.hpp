#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "transit/instance.hpp"

namespace transit {

inline constexpr std::uint64_t kDefaultOracleCap = 1'000'000;

/// Ground truth from exhaustive enumeration.
struct OracleReport {
  Rational optimum;
  /// Optimal selections in lexicographic order, at most the requested number.
  /// The first entry is the lexicographically smallest optimum.
  std::vector<std::vector<std::size_t>> witnesses;
  /// Number of selections evaluated: sum over k <= beta of C(candidates, k).
  std::uint64_t explored = 0;
  Objective objective = Objective::kEgalitarian;
};

/// sum_{k <= min(k_max, n)} C(n, k), saturating at `limit + 1`.
std::uint64_t count_subsets(std::size_t n, std::size_t k_max, std::uint64_t limit);

/// Exhaustive optimum over all stop subsets of size <= beta.
/// Throws TooLarge when the subset count exceeds `cap`.
OracleReport oracle_ptp(const PtpInstance& instance, Objective objective,
                        std::size_t max_witnesses = 16, std::uint64_t cap = kDefaultOracleCap);

/// Exhaustive optimum over all edge subsets of size <= beta.
/// Throws TooLarge when the subset count exceeds `cap`.
OracleReport oracle_ntp(const NtpInstance& instance, Objective objective,
                        std::size_t max_witnesses = 16, std::uint64_t cap = kDefaultOracleCap);

inline OracleReport oracle(const PtpInstance& instance, Objective objective,
                           std::size_t max_witnesses = 16, std::uint64_t cap = kDefaultOracleCap) {
  return oracle_ptp(instance, objective, max_witnesses, cap);
}
inline OracleReport oracle(const NtpInstance& instance, Objective objective,
                           std::size_t max_witnesses = 16, std::uint64_t cap = kDefaultOracleCap) {
  return oracle_ntp(instance, objective, max_witnesses, cap);
}

inline constexpr std::size_t kOraclePathsMaxVertices = 12;

/// Minimum over all simple s-t paths and all subsets of at most `budget` of
/// their edges of the path cost with those edges discounted. Independent of
/// the budget Dijkstra; used as its reference. Throws TooLarge for graphs
/// above kOraclePathsMaxVertices vertices.
Rational oracle_paths(const NtpInstance& instance, const NtpAgent& agent, std::size_t budget);

}  // namespace transit
