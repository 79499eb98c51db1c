#pragma once

#include <functional>

#include "scw/ea_config.hpp"
#include "scw/instance.hpp"
#include "scw/trace.hpp"

namespace scw {

/// dominate(x, y) over (f1, f2) = (cost, uncovered count): true iff
///   1) f1(x) <  f1(y) and f2(x) <= f2(y), or
///   2) f1(x) <= f1(y) and f2(x) <  f2(y), or
///   3) f1(x) == f1(y), f2(x) == f2(y) and |x| < |y|.
bool dominate(const Solution& x, const Solution& y, const SetCoverInstance& inst);

struct SemoEntry {
  Solution bits;
  Rational cost;
  std::size_t uncovered = 0;
  std::size_t ones = 0;
};

struct SemoStepView {
  std::uint64_t step = 0;
  bool accepted = false;
  const std::vector<SemoEntry>* archive = nullptr;
};

using SemoObserver = std::function<void(const SemoStepView&)>;

/// SEMO: keep a mutually non-dominated archive, start from the empty
/// solution, mutate a uniformly chosen member, insert the offspring iff
/// nothing dominates it and evict everything it dominates. Set
/// semantics: an offspring identical to a member leaves the archive
/// unchanged.
RunResult semo_run(const SetCoverInstance& inst, const EaConfig& cfg,
                   const SemoObserver& observer = {});

}  // namespace scw
