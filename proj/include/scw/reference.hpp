#pragma once

#include <vector>

#include "scw/instance.hpp"
#include "scw/isolation.hpp"
#include "scw/known_optimum.hpp"

namespace scw {

/// cost / opt, exact. Requires opt > 0.
Rational approximation_ratio(const Rational& cost, const Rational& opt);

/// Cardinality-indexed reference values L(0..q) with L(0) = 0 and
/// L(q) = opt; partial solutions are scored against L(|mu(x)|).
struct PartialReference {
  int q = 0;
  Rational opt_value;
  std::vector<Rational> profile;  // size q+1

  const Rational& at(std::size_t card) const { return profile.at(card); }
};

/// Linear profile L(j) = opt * j / q.
PartialReference make_linear_reference(int q, const Rational& opt);

/// Diagnostic profile built from an optimal solution's sets: L(j) is the
/// cheapest subcollection of those sets covering at least j elements.
/// Exponential in the optimum size; tiny instances only.
PartialReference make_optimum_prefix_reference(const SetCoverInstance& inst,
                                               const Solution& optimal);

/// cost(x) / L(|mu(x)|); 0 when |mu(x)| = 0 (the empty-solution
/// convention, where both sides vanish).
Rational partial_ratio(const SetCoverInstance& inst, const Solution& x,
                       const PartialReference& ref, const IsolationFunction& iso);

/// (cost(x u y) - cost(x)) / (L(|mu(x u y)|) - L(|mu(x)|)). Throws when
/// y adds no reference value on top of x.
Rational conditional_partial_ratio(const SetCoverInstance& inst, const Solution& x,
                                   const Solution& y, const PartialReference& ref,
                                   const IsolationFunction& iso);

}  // namespace scw
