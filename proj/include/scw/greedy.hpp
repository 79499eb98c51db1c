#pragma once

#include <vector>

#include "scw/instance.hpp"
#include "scw/trace.hpp"

namespace scw {

struct GreedyResult {
  Solution solution;
  PriceMap prices;
  Trace trace;
  /// Set indices in pick order; drives certificate conversion.
  std::vector<std::size_t> picks;
};

/// Classic weighted greedy: repeatedly add the set minimizing
/// w(S) / |S - R| over sets with uncovered elements, pricing each newly
/// covered element at that ratio, until R = U. Ties take the lowest set
/// index. The total price equals the output cost exactly.
GreedyResult greedy_solve(const SetCoverInstance& inst);

}  // namespace scw
