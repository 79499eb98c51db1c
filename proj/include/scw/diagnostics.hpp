#pragma once

#include <string>

#include "scw/instance.hpp"
#include "scw/trace.hpp"

namespace scw {

/// Compares what a SEIP run retained against a SEMO archive from the
/// same instance. For every SEMO member the SEIP population either
/// holds a solution covering at least as many elements at no higher
/// cost ("matched") or it does not ("unmatched"). Diagnostic only: the
/// retention claim is about the frameworks, not any single pair of
/// runs, so nothing here is an invariant.
struct PopulationComparison {
  std::size_t semo_size = 0;
  std::size_t seip_size = 0;
  std::size_t matched = 0;
  std::size_t unmatched = 0;

  std::string summary() const;
};

PopulationComparison compare_populations(const SetCoverInstance& inst, const RunResult& seip,
                                         const RunResult& semo);

}  // namespace scw
