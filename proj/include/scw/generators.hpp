#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "scw/instance.hpp"
#include "scw/known_optimum.hpp"

namespace scw {

/// The hard family for the plain greedy rule: L disjoint k-element
/// column sets of weight 1+epsilon against per-element singletons of
/// weight 1/j (j the element's row). n = kL, m = L(k+1).
struct ProblemISpec {
  int k = 2;        // >= 2
  int L = 1;        // >= 1
  Rational epsilon; // > 0; the columns stay optimal while epsilon < H_k - 1
};

struct ProblemIResult {
  SetCoverInstance instance;
  /// The planted columns; absent when epsilon >= H_k - 1 (the optimum
  /// is no longer the columns).
  std::optional<KnownOptimum> optimum;
  bool epsilon_warning = false;
};

ProblemIResult gen_problem_i(const ProblemISpec& spec);

/// Random coverable k-bounded instance: a partition of [n] into
/// ceil(n/k) chunks guarantees coverability, then m - ceil(n/k) random
/// subsets of size 1..k. Weights lie on the 1/1000 grid between lo and
/// hi. Identical seeds give identical instances.
struct RandomSpec {
  int n = 0;
  int m = 0;
  int k = 0;
  Rational weight_lo = Rational(1);
  Rational weight_hi = Rational(10);
  std::uint64_t seed = 0;

  std::string default_name() const;
};

SetCoverInstance gen_random_k_cover(const RandomSpec& spec);

/// Instance with a planted disjoint k-set optimum over n = kL elements:
/// cheap planted columns plus `extra` expensive random distractors
/// (weight at least k times the dearest plant). The plant is
/// oracle-verified when m is small; a failed verification regenerates
/// distractors from a derived sub-seed, a bounded number of times.
std::pair<SetCoverInstance, KnownOptimum> gen_known_opt(int k, int L, int extra,
                                                        std::uint64_t seed);

}  // namespace scw
