#include "scw/gaww.hpp"

#include <algorithm>

namespace scw {

namespace {

// Exact fraction with a positive machine-word denominator. WT is
// int64_t (weights rescaled to a common denominator) or Rational.
template <class WT>
struct Frac {
  WT num{};
  std::int64_t den = 1;
};

inline bool frac_less(const Frac<std::int64_t>& a, const Frac<std::int64_t>& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}
inline bool frac_less(const Frac<Rational>& a, const Frac<Rational>& b) {
  return a.num * Rational(b.den) < b.num * Rational(a.den);
}

template <class WT>
bool frac_less_eq(const Frac<WT>& a, const Frac<WT>& b) {
  return !frac_less(b, a);
}

template <class WT>
struct WithdrawalBest {
  bool found = false;
  Frac<WT> r;
  std::vector<std::size_t> q;
  std::size_t removed = 0;

  bool better_than(const WithdrawalBest& o) const {
    if (frac_less(r, o.r)) return true;
    if (frac_less(o.r, r)) return false;
    if (q.size() != o.q.size()) return q.size() < o.q.size();
    if (q != o.q) return q < o.q;
    return removed < o.removed;
  }
};

template <class WT>
struct Enumerator {
  const SetCoverInstance& inst;
  const std::vector<WT>& weight;
  int max_q;
  std::uint64_t budget;
  std::uint64_t nodes = 0;

  // Per-search state. missing_at/uni_at are indexed by DFS depth so the
  // inner loop never allocates.
  std::vector<std::size_t> pool;
  std::vector<BitVec> pool_suffix_union;  // over universe, masks [i..end)
  std::vector<BitVec> missing_at;         // part of S~ not yet re-covered
  std::vector<BitVec> uni_at;             // union of chosen Q
  const BitVec* covered = nullptr;
  std::size_t uncovered_total = 0;
  WT removed_weight{};
  Frac<WT> cutoff;  // alpha * greedy ratio; candidates at or above are useless
  WithdrawalBest<WT> best;
  std::vector<std::size_t> chosen;
  WT chosen_weight{};

  Enumerator(const SetCoverInstance& inst, const std::vector<WT>& weight, int max_q,
             std::uint64_t budget)
      : inst(inst), weight(weight), max_q(max_q), budget(budget) {}

  // Minimal r over valid Q for one withdrawn set. `xmask` marks current
  // cover members (excluded from Q).
  void search_for(std::size_t removed, const BitVec& xmask, const BitVec& cov,
                  const Frac<WT>& threshold) {
    covered = &cov;
    uncovered_total = static_cast<std::size_t>(inst.n()) - cov.count();
    removed_weight = weight[removed];
    cutoff = threshold;
    missing_at.assign(static_cast<std::size_t>(max_q) + 1,
                      BitVec(static_cast<std::size_t>(inst.n())));
    uni_at = missing_at;
    missing_at[0] = inst.mask(removed);
    chosen.clear();
    chosen_weight = WT{};

    pool.clear();
    for (std::size_t i = 0; i < inst.m(); ++i) {
      if (i == removed || xmask.test(i)) continue;
      if (inst.mask(i).count_diff(cov) > 0 || inst.mask(i).intersects(missing_at[0])) {
        pool.push_back(i);
      }
    }
    pool_suffix_union.assign(pool.size() + 1, BitVec(static_cast<std::size_t>(inst.n())));
    for (std::size_t i = pool.size(); i-- > 0;) {
      pool_suffix_union[i] = pool_suffix_union[i + 1] | inst.mask(pool[i]);
    }
    best.removed = removed;
    dfs(0);
  }

  void dfs(std::size_t start) {
    const std::size_t depth = chosen.size();
    if (static_cast<int>(depth) == max_q) return;
    for (std::size_t idx = start; idx < pool.size(); ++idx) {
      if (++nodes > budget) {
        throw GawwEnumerationLimit(
            "gaww: withdrawal enumeration budget exceeded; rerun with a smaller k or m "
            "or a larger enum_budget");
      }
      const std::size_t s = pool[idx];
      // The remaining pool must still be able to re-cover S~.
      if (!missing_at[depth].subset_of(pool_suffix_union[idx])) return;

      missing_at[depth + 1] = missing_at[depth];
      missing_at[depth + 1] -= inst.mask(s);
      uni_at[depth + 1] = uni_at[depth];
      uni_at[depth + 1] |= inst.mask(s);
      chosen.push_back(s);
      chosen_weight = chosen_weight + weight[s];

      std::size_t new_count = uni_at[depth + 1].count_diff(*covered);
      if (!missing_at[depth + 1].any() && new_count > 0) {
        Frac<WT> r{chosen_weight - removed_weight, static_cast<std::int64_t>(new_count)};
        if (frac_less(r, cutoff)) {
          WithdrawalBest<WT> cand{true, r, chosen, best.removed};
          if (!best.found || cand.better_than(best)) best = std::move(cand);
        }
      }
      if (admissible(new_count)) dfs(idx + 1);

      chosen_weight = chosen_weight - weight[s];
      chosen.pop_back();
    }
  }

  // Lower bound on any completion's r; prune when it cannot beat both
  // the found best and the greedy cutoff.
  bool admissible(std::size_t new_count) {
    if (static_cast<int>(chosen.size()) >= max_q) return false;
    const std::size_t slots = static_cast<std::size_t>(max_q) - chosen.size();
    WT num_lo = chosen_weight - removed_weight;
    std::size_t d_hi = std::min(uncovered_total,
                                new_count + slots * static_cast<std::size_t>(inst.k()));
    std::size_t d_lo = std::max<std::size_t>(1, new_count);
    if (d_hi == 0) return false;
    bool nonneg = !(num_lo < WT{});
    Frac<WT> bound{num_lo, static_cast<std::int64_t>(nonneg ? d_hi : d_lo)};
    if (!frac_less(bound, cutoff)) return false;
    if (best.found && frac_less(best.r, bound)) return false;
    return true;
  }
};

template <class WT>
GawwResult gaww_run(const SetCoverInstance& inst, const GawwConfig& cfg,
                    const std::vector<WT>& weight, const Rational& den_unit) {
  const std::size_t n = static_cast<std::size_t>(inst.n());
  const int k = inst.k();
  const std::int64_t k3 = static_cast<std::int64_t>(k) * k * k;
  const Rational alpha = cfg.alpha ? *cfg.alpha : Rational(BigInt(k3 - 1), BigInt(k3));
  if (!(alpha > Rational(0)) || !(alpha < Rational(1))) {
    throw std::invalid_argument("gaww: alpha must lie strictly between 0 and 1");
  }
  const int max_q = cfg.max_withdrawal_size ? *cfg.max_withdrawal_size : k;
  if (max_q < 1) throw std::invalid_argument("gaww: max withdrawal size must be >= 1");

  GawwResult res{inst.empty_solution(), PriceMap(n), {}, {}, 0, 0, 0};
  BitVec covered(n);
  BitVec xmask(inst.m());
  std::vector<std::size_t> x_members;
  Rational cost;
  std::uint64_t step = 0;

  {
    TraceRecord init;
    init.algorithm = "gaww";
    init.event = "init";
    init.bits = res.solution;
    res.trace.push_back(init);
  }

  Enumerator<WT> enumerator(inst, weight, max_q, cfg.enum_budget);

  auto to_rational = [&](const Frac<WT>& f) {
    if constexpr (std::is_same_v<WT, Rational>) {
      return f.num / Rational(f.den);
    } else {
      return Rational(BigInt(f.num), BigInt(f.den)) * den_unit;
    }
  };

  while (covered.count() != n) {
    // Greedy candidate.
    std::size_t ghat = inst.m();
    Frac<WT> rhat;
    for (std::size_t i = 0; i < inst.m(); ++i) {
      std::size_t gain = inst.mask(i).count_diff(covered);
      if (gain == 0) continue;
      Frac<WT> r{weight[i], static_cast<std::int64_t>(gain)};
      if (ghat == inst.m() || frac_less(r, rhat)) {
        ghat = i;
        rhat = r;
      }
    }

    // Withdrawal candidate: cutoff alpha * rhat in exact arithmetic.
    Frac<WT> cutoff;
    if constexpr (std::is_same_v<WT, Rational>) {
      cutoff = {rhat.num * alpha, rhat.den};
    } else {
      // alpha = a/b: cutoff = (rhat.num * a) / (rhat.den * b).
      const std::int64_t a = alpha.numerator().convert_to<std::int64_t>();
      const std::int64_t b = alpha.denominator().convert_to<std::int64_t>();
      cutoff = {rhat.num * a, rhat.den * b};
    }

    WithdrawalBest<WT> best;
    for (std::size_t s : x_members) {
      enumerator.search_for(s, xmask, covered, cutoff);
      if (enumerator.best.found && (!best.found || enumerator.best.better_than(best))) {
        best = enumerator.best;
      }
      enumerator.best = WithdrawalBest<WT>{};
    }
    res.enum_nodes = enumerator.nodes;

    GawwStep record;
    if (best.found) {
      // Withdrawal step: price union(Q) - R at r, swap S~ for Q.
      record.is_withdrawal = true;
      record.added = best.q;
      record.removed = best.removed;
      record.ratio = to_rational(best.r);
      ++res.withdrawal_count;
      BitVec quni(n);
      for (std::size_t s : best.q) quni |= inst.mask(s);
      for (std::size_t e = 0; e < n; ++e) {
        if (quni.test(e) && !covered.test(e)) res.prices.price[e] = record.ratio;
      }
      covered |= quni;
      for (std::size_t s : best.q) {
        res.solution.set(s);
        xmask.set(s);
        cost += inst.set(s).weight;
      }
      res.solution.reset(best.removed);
      xmask.reset(best.removed);
      cost -= inst.set(best.removed).weight;
      x_members.clear();
      for (std::size_t i = 0; i < inst.m(); ++i) {
        if (xmask.test(i)) x_members.push_back(i);
      }
    } else {
      record.added = {ghat};
      record.ratio = to_rational(rhat);
      for (int e : inst.set(ghat).elements) {
        if (!covered.test(static_cast<std::size_t>(e - 1))) {
          res.prices.price[static_cast<std::size_t>(e - 1)] = record.ratio;
        }
      }
      covered |= inst.mask(ghat);
      res.solution.set(ghat);
      xmask.set(ghat);
      cost += inst.set(ghat).weight;
      x_members.insert(std::lower_bound(x_members.begin(), x_members.end(), ghat), ghat);
    }
    res.steps.push_back(record);

    // Disjointness diagnostic of the partial cover.
    std::size_t span = 0;
    BitVec uni(n);
    for (std::size_t i : x_members) {
      span += inst.set(i).elements.size();
      uni |= inst.mask(i);
    }
    if (span != uni.count()) ++res.overlap_steps;

    TraceRecord r;
    r.step = ++step;
    r.algorithm = "gaww";
    r.event = record.is_withdrawal ? "withdrawal" : "greedy";
    r.cardinality = covered.count();
    r.cost = cost;
    r.bits = res.solution;
    r.accepted = true;
    res.trace.push_back(r);
  }
  return res;
}

}  // namespace

GawwResult gaww_solve(const SetCoverInstance& inst, const GawwConfig& cfg) {
  if (inst.k() < 2) {
    throw std::invalid_argument("gaww: requires a k-set cover instance with k >= 2");
  }
  if (!cfg.force_exact_arithmetic) {
    // The int64 path multiplies weight sums by alpha's components, so
    // both must leave headroom.
    bool alpha_small = true;
    if (cfg.alpha) {
      alpha_small = cfg.alpha->numerator() < (BigInt(1) << 10) &&
                    cfg.alpha->denominator() < (BigInt(1) << 10);
    }
    if (auto scaled = scale_weights(inst); scaled && alpha_small) {
      BigInt total = 0;
      for (auto w : scaled->num) total += w;
      const std::int64_t k3 = static_cast<std::int64_t>(inst.k()) * inst.k() * inst.k();
      if (total * std::max<std::int64_t>(k3, 1 << 10) < (BigInt(1) << 61)) {
        return gaww_run<std::int64_t>(inst, cfg, scaled->num,
                                      Rational(BigInt(1), BigInt(scaled->den)));
      }
    }
  }
  std::vector<Rational> w;
  for (const auto& s : inst.sets()) w.push_back(s.weight);
  return gaww_run<Rational>(inst, cfg, w, Rational(1));
}

}  // namespace scw
