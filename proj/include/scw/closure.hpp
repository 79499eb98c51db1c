#pragma once

#include <cstdint>

#include "scw/instance.hpp"

namespace scw {

/// Closure of the collection under the subset operation. The output
/// contains every nonempty subset of every input set, deduplicated by
/// element content; each output set's weight is the minimum weight over
/// all its input supersets. Originals keep their positions (with
/// possibly reduced weights); new subsets are appended in discovery
/// order. Preserves the optimal cost.
///
/// Refuses (throws std::length_error) when m * 2^k exceeds `budget`.
SetCoverInstance extend_closure(const SetCoverInstance& inst, std::uint64_t budget = 1u << 20);

}  // namespace scw
