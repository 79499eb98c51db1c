#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scw/instance.hpp"
#include "scw/trace.hpp"

namespace scw {

/// Raised when the withdrawal enumeration exceeds its node budget.
class GawwEnumerationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GawwConfig {
  /// Withdrawal threshold, 1 - 1/k^3 unless overridden. Must be in (0,1).
  std::optional<Rational> alpha;
  /// Largest replacement collection |Q|; the instance k unless overridden.
  std::optional<int> max_withdrawal_size;
  /// Cap on enumeration nodes per solve; exceeding it throws.
  std::uint64_t enum_budget = 400'000'000;
  /// Test hook: skip the int64 fast path.
  bool force_exact_arithmetic = false;
};

struct GawwStep {
  bool is_withdrawal = false;
  std::vector<std::size_t> added;
  std::optional<std::size_t> removed;
  Rational ratio;  // the r value that priced this step's new elements
};

struct GawwResult {
  Solution solution;
  PriceMap prices;
  Trace trace;
  std::vector<GawwStep> steps;
  std::uint64_t withdrawal_count = 0;
  /// Steps after which the partial cover's sets were not pairwise
  /// disjoint. Diagnostic only; nothing enforces disjointness here.
  std::uint64_t overlap_steps = 0;
  std::uint64_t enum_nodes = 0;
};

/// Greedy with withdrawals. Each iteration either takes the greedy step
/// (set minimizing w(S)/|S-R|) or, when some replacement beats it by
/// factor alpha, a withdrawal: a set S~ of the partial cover is swapped
/// for a collection Q of at most k sets with S~ covered by Q's union,
/// Q adding at least one new element, minimizing
/// r(S~,Q) = (w(Q) - w(S~)) / |union(Q) - R|.
/// Requiring Q to re-cover S~ (and excluding current-cover members from
/// Q) keeps the output a genuine cover and the price/cost identity
/// exact. Ties take the fewest sets in Q, then lexicographic Q indices,
/// then the lowest S~ index. Requires instance k >= 2.
GawwResult gaww_solve(const SetCoverInstance& inst, const GawwConfig& cfg = {});

}  // namespace scw
