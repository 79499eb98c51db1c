#include "scw/closure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace scw {

SetCoverInstance extend_closure(const SetCoverInstance& inst, std::uint64_t budget) {
  if (inst.k() >= 63) throw std::length_error("extend_closure: k too large");
  const std::uint64_t work = inst.m() * (std::uint64_t{1} << inst.k());
  if (work > budget) {
    throw std::length_error("extend_closure: m * 2^k exceeds the configured budget");
  }

  // Originals keep their positions (first occurrence wins among
  // duplicates); new proper subsets are appended in discovery order.
  // Weights are fixed up afterwards as min over all input supersets.
  std::map<std::vector<int>, std::size_t> seen;
  std::vector<SetEntry> out;
  for (const auto& s : inst.sets()) {
    if (seen.emplace(s.elements, out.size()).second) out.push_back(s);
  }
  for (const auto& s : inst.sets()) {
    const auto& elems = s.elements;
    const std::size_t sz = elems.size();
    for (std::uint64_t pick = (1ULL << sz) - 2; pick >= 1; --pick) {
      std::vector<int> subset;
      for (std::size_t j = 0; j < sz; ++j) {
        if (pick & (1ULL << j)) subset.push_back(elems[j]);
      }
      if (seen.emplace(subset, out.size()).second) {
        out.push_back(SetEntry{std::move(subset), s.weight});
      }
    }
  }
  for (auto& entry : out) {
    for (const auto& s : inst.sets()) {
      if (entry.elements.size() > s.elements.size()) continue;
      if (std::includes(s.elements.begin(), s.elements.end(), entry.elements.begin(),
                        entry.elements.end())) {
        if (s.weight < entry.weight) entry.weight = s.weight;
      }
    }
  }
  return SetCoverInstance(inst.n(), std::move(out), inst.name() + "+closure");
}

}  // namespace scw
