#pragma once

#include "scw/bits.hpp"
#include "scw/instance.hpp"

namespace scw {

enum class IsolationKind {
  kCoveredElements,  // mu(x) = R(x), q = n
  kFeasibility,      // mu(x) = [1] iff x feasible, q = 1
};

/// Maps solutions to subsets of [q]; solutions compete only within
/// equal |mu(x)|. mu(x) = [q] exactly when x is feasible.
struct IsolationFunction {
  IsolationKind kind = IsolationKind::kCoveredElements;
  int q = 0;

  static IsolationFunction covered_elements(const SetCoverInstance& inst) {
    return {IsolationKind::kCoveredElements, inst.n()};
  }
  static IsolationFunction feasibility() { return {IsolationKind::kFeasibility, 1}; }
};

inline BitVec isolation(const SetCoverInstance& inst, const IsolationFunction& f,
                        const Solution& x) {
  if (f.kind == IsolationKind::kCoveredElements) return inst.covered(x);
  BitVec r(1);
  if (inst.is_feasible(x)) r.set(0);
  return r;
}

inline std::size_t isolation_cardinality(const SetCoverInstance& inst, const IsolationFunction& f,
                                         const Solution& x) {
  if (f.kind == IsolationKind::kCoveredElements) return inst.covered(x).count();
  return inst.is_feasible(x) ? 1 : 0;
}

}  // namespace scw
