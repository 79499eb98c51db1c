#include "scw/diagnostics.hpp"

#include <sstream>

namespace scw {

PopulationComparison compare_populations(const SetCoverInstance& inst, const RunResult& seip,
                                         const RunResult& semo) {
  PopulationComparison out;
  out.seip_size = seip.final_population.size();
  out.semo_size = semo.final_population.size();
  for (const auto& member : semo.final_population) {
    const std::size_t covered = inst.covered(member).count();
    const Rational cost = inst.cost(member);
    bool matched = false;
    for (const auto& resident : seip.final_population) {
      if (inst.covered(resident).count() >= covered && !(cost < inst.cost(resident))) {
        matched = true;
        break;
      }
    }
    if (matched) {
      ++out.matched;
    } else {
      ++out.unmatched;
    }
  }
  return out;
}

std::string PopulationComparison::summary() const {
  std::ostringstream out;
  out << "seip_population=" << seip_size << " semo_archive=" << semo_size
      << " matched=" << matched << " unmatched=" << unmatched;
  return out.str();
}

}  // namespace scw
