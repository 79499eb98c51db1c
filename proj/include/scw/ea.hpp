#pragma once

#include "scw/ea_config.hpp"
#include "scw/instance.hpp"
#include "scw/trace.hpp"

namespace scw {

/// (1+1)-EA: mutate the single current solution, replace it when the
/// offspring is acceptable. Literal acceptance replaces x by x' iff x'
/// is feasible and cost(x') <= cost(x) (so an infeasible chain never
/// moves); penalty acceptance minimizes cost + n * w_max * uncovered.
/// best_feasible reports the cheapest feasible solution evaluated at
/// any point, accepted or not.
RunResult opo_ea_run(const SetCoverInstance& inst, const EaConfig& cfg);

}  // namespace scw
