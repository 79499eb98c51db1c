#pragma once

#include <cstdint>
#include <stdexcept>

#include "scw/instance.hpp"

namespace scw {

/// Raised when an instance is too large for exhaustive solving. Callers
/// must not fall back to a heuristic silently.
class OracleRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExactResult {
  Rational value;
  Solution solution;
  std::uint64_t nodes = 0;
};

/// Minimum-cost feasible solution by depth-first enumeration over the
/// sets in input order (exclude branch first), pruning partial
/// selections whose cost already reaches the incumbent and prefixes
/// that can no longer cover the universe. The exclude-first order makes
/// the first optimum found the lexicographically smallest bit vector.
ExactResult exact_solve(const SetCoverInstance& inst, std::size_t max_sets = 24);

}  // namespace scw
