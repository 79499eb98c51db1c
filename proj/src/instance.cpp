#include "scw/instance.hpp"

#include <algorithm>
#include <stdexcept>

namespace scw {

SetCoverInstance::SetCoverInstance(int n, std::vector<SetEntry> sets, std::string name)
    : n_(n), name_(std::move(name)), sets_(std::move(sets)) {
  if (n_ <= 0) throw std::invalid_argument("instance: n must be positive");
  if (sets_.empty()) throw std::invalid_argument("instance: empty collection");
  BitVec all(static_cast<std::size_t>(n_));
  masks_.reserve(sets_.size());
  for (auto& s : sets_) {
    if (s.elements.empty()) throw std::invalid_argument("instance: empty set");
    if (!(s.weight > Rational(0))) throw std::invalid_argument("instance: non-positive weight");
    std::sort(s.elements.begin(), s.elements.end());
    s.elements.erase(std::unique(s.elements.begin(), s.elements.end()), s.elements.end());
    BitVec mask(static_cast<std::size_t>(n_));
    for (int e : s.elements) {
      if (e < 1 || e > n_) throw std::invalid_argument("instance: element out of range");
      mask.set(static_cast<std::size_t>(e - 1));
    }
    all |= mask;
    masks_.push_back(std::move(mask));
    k_ = std::max(k_, static_cast<int>(s.elements.size()));
    if (s.weight > max_weight_) max_weight_ = s.weight;
  }
  if (all.count() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("instance: sets do not cover the universe");
  }
}

BitVec SetCoverInstance::covered(const Solution& x) const {
  bind_check(x);
  BitVec r(static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < m(); ++i) {
    if (x.test(i)) r |= masks_[i];
  }
  return r;
}

Rational SetCoverInstance::cost(const Solution& x) const {
  bind_check(x);
  Rational total;
  for (std::size_t i = 0; i < m(); ++i) {
    if (x.test(i)) total += sets_[i].weight;
  }
  return total;
}

std::optional<ScaledWeights> scale_weights(const SetCoverInstance& inst) {
  const BigInt kDenLimit = BigInt(1) << 31;
  BigInt lcm = 1;
  for (const auto& s : inst.sets()) {
    BigInt d = s.weight.denominator();
    lcm = boost::multiprecision::lcm(lcm, d);
    if (lcm > kDenLimit) return std::nullopt;
  }
  ScaledWeights out;
  out.den = lcm.convert_to<std::int64_t>();
  BigInt total = 0;
  for (const auto& s : inst.sets()) {
    BigInt scaled = s.weight.numerator() * (lcm / s.weight.denominator());
    total += scaled;
    out.num.push_back(scaled.convert_to<std::int64_t>());
  }
  // Leave headroom for the penalty fitness n * w_max * n on top of any sum.
  BigInt worst = total;
  for (const auto& s : inst.sets()) {
    BigInt scaled = s.weight.numerator() * (lcm / s.weight.denominator());
    BigInt penalty = scaled * inst.n() * inst.n();
    if (penalty > worst) worst = penalty;
  }
  if (total + worst >= (BigInt(1) << 62)) return std::nullopt;
  return out;
}

}  // namespace scw
