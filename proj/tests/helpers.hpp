#pragma once

#include <vector>

#include "scw/instance.hpp"
#include "scw/rng.hpp"

namespace scw::testing {

/// Shared three-element fixture: S1={1,2} w=1, S2={3} w=1,
/// S3={1,2,3} w=5/2. Optimum {S1,S2} at cost 2.
inline SetCoverInstance e1() {
  std::vector<SetEntry> sets;
  sets.push_back({{1, 2}, Rational(1)});
  sets.push_back({{3}, Rational(1)});
  sets.push_back({{1, 2, 3}, Rational::of(5, 2)});
  return SetCoverInstance(3, std::move(sets), "e1");
}

inline Solution solution_of(const SetCoverInstance& inst, std::initializer_list<std::size_t> bits) {
  Solution s = inst.empty_solution();
  for (auto b : bits) s.set(b);
  return s;
}

inline Solution random_solution(const SetCoverInstance& inst, Rng& rng) {
  Solution s = inst.empty_solution();
  for (std::size_t i = 0; i < inst.m(); ++i) {
    if (rng.one_in(2)) s.set(i);
  }
  return s;
}

}  // namespace scw::testing
