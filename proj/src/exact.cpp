#include "scw/exact.hpp"

#include <optional>

namespace scw {

namespace {

struct Search {
  const SetCoverInstance& inst;
  std::vector<BitVec> suffix_union;  // union of masks [i..m)
  std::optional<Rational> best;
  Solution best_bits;
  Solution current;
  std::uint64_t nodes = 0;

  explicit Search(const SetCoverInstance& inst)
      : inst(inst), best_bits(inst.m()), current(inst.m()) {
    suffix_union.assign(inst.m() + 1, BitVec(static_cast<std::size_t>(inst.n())));
    for (std::size_t i = inst.m(); i-- > 0;) {
      suffix_union[i] = suffix_union[i + 1] | inst.mask(i);
    }
  }

  void dfs(std::size_t i, const BitVec& covered, const Rational& cost) {
    ++nodes;
    if (best && cost >= *best) return;
    if (covered.count() == static_cast<std::size_t>(inst.n())) {
      best = cost;
      best_bits = current;
      return;
    }
    if (i == inst.m()) return;
    // Remaining sets must be able to finish the cover.
    if ((covered | suffix_union[i]).count() != static_cast<std::size_t>(inst.n())) return;
    dfs(i + 1, covered, cost);
    current.set(i);
    dfs(i + 1, covered | inst.mask(i), cost + inst.set(i).weight);
    current.reset(i);
  }
};

}  // namespace

ExactResult exact_solve(const SetCoverInstance& inst, std::size_t max_sets) {
  if (inst.m() > max_sets) {
    throw OracleRefusal("exact_solve: instance has " + std::to_string(inst.m()) +
                        " sets, above the enumeration limit of " + std::to_string(max_sets));
  }
  Search s(inst);
  s.dfs(0, BitVec(static_cast<std::size_t>(inst.n())), Rational());
  // Construction guarantees coverability, so a solution always exists.
  return ExactResult{*s.best, s.best_bits, s.nodes};
}

}  // namespace scw
