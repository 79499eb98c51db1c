#include "scw/reference.hpp"

#include <stdexcept>

namespace scw {

Rational approximation_ratio(const Rational& cost, const Rational& opt) {
  if (!(opt > Rational(0))) throw std::domain_error("approximation_ratio: opt must be > 0");
  return cost / opt;
}

PartialReference make_linear_reference(int q, const Rational& opt) {
  if (q < 1) throw std::invalid_argument("make_linear_reference: q must be >= 1");
  if (!(opt > Rational(0))) throw std::invalid_argument("make_linear_reference: opt must be > 0");
  PartialReference ref{q, opt, {}};
  ref.profile.reserve(static_cast<std::size_t>(q) + 1);
  for (int j = 0; j <= q; ++j) {
    ref.profile.push_back(opt * Rational(BigInt(j), BigInt(q)));
  }
  return ref;
}

PartialReference make_optimum_prefix_reference(const SetCoverInstance& inst,
                                               const Solution& optimal) {
  const auto members = optimal.ones();
  if (members.size() > 20) {
    throw std::invalid_argument("make_optimum_prefix_reference: optimum too large");
  }
  const std::size_t n = static_cast<std::size_t>(inst.n());
  const Rational opt = inst.cost(optimal);
  std::vector<std::optional<Rational>> best(n + 1);
  for (std::uint64_t pick = 0; pick < (1ULL << members.size()); ++pick) {
    BitVec cov(n);
    Rational cost;
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (pick & (1ULL << j)) {
        cov |= inst.mask(members[j]);
        cost += inst.set(members[j]).weight;
      }
    }
    std::size_t card = cov.count();
    if (!best[card] || cost < *best[card]) best[card] = cost;
  }
  // L(j) = min cost reaching coverage >= j; makes L non-decreasing.
  PartialReference ref{static_cast<int>(n), opt, {}};
  ref.profile.assign(n + 1, opt);
  std::optional<Rational> suffix_min;
  for (std::size_t j = n + 1; j-- > 0;) {
    if (best[j] && (!suffix_min || *best[j] < *suffix_min)) suffix_min = best[j];
    ref.profile[j] = *suffix_min;  // j = n is always populated by the full optimum
  }
  return ref;
}

Rational partial_ratio(const SetCoverInstance& inst, const Solution& x,
                       const PartialReference& ref, const IsolationFunction& iso) {
  const std::size_t card = isolation_cardinality(inst, iso, x);
  if (card == 0) return Rational(0);
  return inst.cost(x) / ref.at(card);
}

Rational conditional_partial_ratio(const SetCoverInstance& inst, const Solution& x,
                                   const Solution& y, const PartialReference& ref,
                                   const IsolationFunction& iso) {
  const Solution joint = x | y;
  const Rational denom =
      ref.at(isolation_cardinality(inst, iso, joint)) - ref.at(isolation_cardinality(inst, iso, x));
  if (!(denom > Rational(0))) {
    throw std::domain_error("conditional_partial_ratio: y adds no reference value beyond x");
  }
  return (inst.cost(joint) - inst.cost(x)) / denom;
}

}  // namespace scw
