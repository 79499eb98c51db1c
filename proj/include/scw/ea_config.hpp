#pragma once

#include <cstdint>

#include "scw/mutation.hpp"

namespace scw {

enum class Acceptance {
  kLiteral,  // accept iff offspring feasible and cost does not increase
  kPenalty,  // minimize cost + n * w_max * uncovered
};

enum class InitKind {
  kEmpty,
  kRandom,
};

/// Shared configuration for the stochastic solvers. `budget` counts
/// mutation+evaluation iterations of the main loop. `acceptance` and
/// `init` apply to the (1+1)-EA only; SEMO and SEIP always start from
/// the empty solution.
struct EaConfig {
  MutationKind mutation = MutationKind::kOneBit;
  std::uint64_t budget = 1;
  std::uint64_t seed = 0;
  Acceptance acceptance = Acceptance::kLiteral;
  InitKind init = InitKind::kEmpty;
  bool record_trace = false;
  bool force_exact_arithmetic = false;
};

}  // namespace scw
