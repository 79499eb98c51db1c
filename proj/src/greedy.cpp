#include "scw/greedy.hpp"

namespace scw {

GreedyResult greedy_solve(const SetCoverInstance& inst) {
  const std::size_t n = static_cast<std::size_t>(inst.n());
  GreedyResult res{inst.empty_solution(), PriceMap(n), {}, {}};
  BitVec covered(n);
  Rational cost;
  std::uint64_t step = 0;

  {
    TraceRecord init;
    init.algorithm = "greedy";
    init.event = "init";
    init.bits = res.solution;
    res.trace.push_back(init);
  }

  while (covered.count() != n) {
    std::size_t best = inst.m();
    Rational best_ratio;
    for (std::size_t i = 0; i < inst.m(); ++i) {
      std::size_t gain = inst.mask(i).count_diff(covered);
      if (gain == 0) continue;
      Rational ratio = inst.set(i).weight / Rational(static_cast<long long>(gain));
      if (best == inst.m() || ratio < best_ratio) {
        best = i;
        best_ratio = ratio;
      }
    }
    // Coverability is a construction invariant, so a useful set exists.
    for (int e : inst.set(best).elements) {
      if (!covered.test(static_cast<std::size_t>(e - 1))) {
        res.prices.price[static_cast<std::size_t>(e - 1)] = best_ratio;
      }
    }
    covered |= inst.mask(best);
    res.solution.set(best);
    cost += inst.set(best).weight;
    res.picks.push_back(best);

    TraceRecord r;
    r.step = ++step;
    r.algorithm = "greedy";
    r.event = "greedy";
    r.cardinality = covered.count();
    r.cost = cost;
    r.bits = res.solution;
    r.accepted = true;
    res.trace.push_back(r);
  }
  return res;
}

}  // namespace scw
