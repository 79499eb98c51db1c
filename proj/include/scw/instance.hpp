#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scw/bits.hpp"
#include "scw/rational.hpp"

namespace scw {

/// One set of the collection: its elements (1-based, sorted ascending)
/// and its positive weight.
struct SetEntry {
  std::vector<int> elements;
  Rational weight;
};

/// A weighted set cover instance (n, w, C, U). Immutable after
/// construction; construction validates every invariant: elements in
/// [1, n], sets nonempty, weights positive, union of all sets = U.
class SetCoverInstance {
 public:
  SetCoverInstance(int n, std::vector<SetEntry> sets, std::string name);

  int n() const { return n_; }
  std::size_t m() const { return sets_.size(); }
  int k() const { return k_; }
  const std::string& name() const { return name_; }
  const std::vector<SetEntry>& sets() const { return sets_; }
  const SetEntry& set(std::size_t i) const { return sets_[i]; }

  /// Element membership of set i as a bit vector over the universe
  /// (element e maps to bit e-1).
  const BitVec& mask(std::size_t i) const { return masks_[i]; }

  const Rational& max_weight() const { return max_weight_; }

  Solution empty_solution() const { return Solution(m()); }

  /// Union of the selected sets' elements.
  BitVec covered(const Solution& x) const;

  bool is_feasible(const Solution& x) const { return covered(x).count() == static_cast<std::size_t>(n_); }

  /// Sum of selected weights, exact. The empty sum is 0.
  Rational cost(const Solution& x) const;

 private:
  void bind_check(const Solution& x) const {
    if (x.size() != m()) throw std::invalid_argument("solution length does not match instance");
  }

  int n_;
  int k_ = 0;
  std::string name_;
  std::vector<SetEntry> sets_;
  std::vector<BitVec> masks_;
  Rational max_weight_;
};

/// Weights rescaled to a common denominator for the solver hot loops:
/// weight i equals num[i] / den. Only built when every product stays
/// comfortably inside int64; callers fall back to Rational otherwise.
struct ScaledWeights {
  std::vector<std::int64_t> num;
  std::int64_t den = 1;

  Rational to_rational(std::int64_t total) const { return Rational(BigInt(total), BigInt(den)); }
};

/// Attempts the common-denominator rescale. Fails (nullopt) when the
/// lcm of denominators or the worst-case cost sum would overflow.
std::optional<ScaledWeights> scale_weights(const SetCoverInstance& inst);

}  // namespace scw
