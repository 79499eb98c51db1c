#pragma once

#include <functional>
#include <optional>

#include "scw/ea_config.hpp"
#include "scw/instance.hpp"
#include "scw/isolation.hpp"
#include "scw/trace.hpp"

namespace scw {

/// superior(x, y): true iff |mu(x)| = |mu(y)| and x has strictly lower
/// cost, or equal cost and strictly fewer selected sets.
bool superior(const Solution& x, const Solution& y, const SetCoverInstance& inst,
              const IsolationFunction& iso);

struct SeipResident {
  Solution bits;
  Rational cost;
  std::size_t ones = 0;
};

struct SeipStepView {
  std::uint64_t step = 0;
  bool accepted = false;
  std::size_t offspring_cardinality = 0;
  /// Slot i holds the resident with |mu| = i, if any. Size q+1.
  const std::vector<std::optional<SeipResident>>* population = nullptr;
};

using SeipObserver = std::function<void(const SeipStepView&)>;

/// SEIP from the empty solution: mutate a uniformly chosen population
/// member, insert the offspring unless the resident of its isolation is
/// superior; the offspring then replaces that resident (when neither is
/// superior, replacement keeps one resident per isolation, so the
/// population never exceeds q+1). One-bit mutation is LSEIP, bit-wise
/// is GSEIP. Returns the resident of the feasible isolation, if any.
RunResult seip_run(const SetCoverInstance& inst, const IsolationFunction& iso,
                   const EaConfig& cfg, const SeipObserver& observer = {});

}  // namespace scw
