#pragma once

#include "scw/bits.hpp"
#include "scw/rng.hpp"

namespace scw {

enum class MutationKind {
  kOneBit,   // flip one uniformly chosen position
  kBitWise,  // flip each position independently with probability 1/m
};

/// In-place variants for solver loops: `out` must already hold a copy of
/// the parent.
inline void one_bit_mutation_inplace(Solution& out, Rng& rng) {
  out.flip(rng.below(out.size()));
}

inline void bitwise_mutation_inplace(Solution& out, Rng& rng) {
  const std::size_t m = out.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (rng.one_in(m)) out.flip(i);
  }
}

inline Solution one_bit_mutation(const Solution& x, Rng& rng) {
  Solution out = x;
  one_bit_mutation_inplace(out, rng);
  return out;
}

inline Solution bitwise_mutation(const Solution& x, Rng& rng) {
  Solution out = x;
  bitwise_mutation_inplace(out, rng);
  return out;
}

inline void mutate_inplace(Solution& out, MutationKind kind, Rng& rng) {
  if (kind == MutationKind::kOneBit) {
    one_bit_mutation_inplace(out, rng);
  } else {
    bitwise_mutation_inplace(out, rng);
  }
}

}  // namespace scw
