#include "scw/ea.hpp"

#include "scw/rng.hpp"

namespace scw {

namespace {

template <class WT>
struct Eval {
  WT cost{};
  std::size_t covered = 0;
};

template <class WT>
Eval<WT> evaluate(const SetCoverInstance& inst, const std::vector<WT>& w, const Solution& x,
                  BitVec& cov_scratch) {
  Eval<WT> ev;
  cov_scratch.clear();
  for (std::size_t i = 0; i < inst.m(); ++i) {
    if (x.test(i)) {
      ev.cost = ev.cost + w[i];
      cov_scratch |= inst.mask(i);
    }
  }
  ev.covered = cov_scratch.count();
  return ev;
}

template <class WT>
RunResult opo_run(const SetCoverInstance& inst, const EaConfig& cfg, const std::vector<WT>& w,
                  const Rational& unit) {
  const std::size_t n = static_cast<std::size_t>(inst.n());
  Rng rng(cfg.seed);
  BitVec cov(n);

  auto to_rational = [&](const WT& c) {
    if constexpr (std::is_same_v<WT, Rational>) {
      return c;
    } else {
      return Rational(BigInt(c)) * unit;
    }
  };

  WT penalty_unit{};
  {
    WT wmax{};
    for (const auto& wi : w) {
      if (wmax < wi) wmax = wi;
    }
    if constexpr (std::is_same_v<WT, Rational>) {
      penalty_unit = Rational(static_cast<long long>(n)) * wmax;
    } else {
      penalty_unit = static_cast<WT>(n) * wmax;
    }
  }
  auto fitness = [&](const Eval<WT>& ev) {
    if constexpr (std::is_same_v<WT, Rational>) {
      return ev.cost + penalty_unit * Rational(static_cast<long long>(n - ev.covered));
    } else {
      return ev.cost + penalty_unit * static_cast<WT>(n - ev.covered);
    }
  };

  Solution x = inst.empty_solution();
  if (cfg.init == InitKind::kRandom) {
    for (std::size_t i = 0; i < inst.m(); ++i) {
      if (rng.one_in(2)) x.set(i);
    }
  }
  Eval<WT> cur = evaluate(inst, w, x, cov);

  RunResult res;
  res.seed = cfg.seed;
  std::optional<WT> best_feasible_cost;
  Solution best_bits = inst.empty_solution();
  auto note_feasible = [&](const Eval<WT>& ev, const Solution& bits) {
    if (ev.covered != n) return;
    if (!best_feasible_cost || ev.cost < *best_feasible_cost) {
      best_feasible_cost = ev.cost;
      best_bits = bits;
    }
  };
  note_feasible(cur, x);

  if (cfg.record_trace) {
    TraceRecord init;
    init.algorithm = "opo-ea";
    init.event = "init";
    init.cardinality = cur.covered;
    init.cost = to_rational(cur.cost);
    init.bits = x;
    res.trace.push_back(init);
  }

  Solution offspring = x;
  for (std::uint64_t step = 1; step <= cfg.budget; ++step) {
    offspring = x;
    mutate_inplace(offspring, cfg.mutation, rng);
    Eval<WT> ev = evaluate(inst, w, offspring, cov);
    note_feasible(ev, offspring);

    bool accept;
    if (cfg.acceptance == Acceptance::kLiteral) {
      accept = ev.covered == n && !(cur.cost < ev.cost);
    } else {
      accept = !(fitness(cur) < fitness(ev));
    }
    if (cfg.record_trace) {
      TraceRecord r;
      r.step = step;
      r.algorithm = "opo-ea";
      r.event = accept ? "accept" : "reject";
      r.cardinality = ev.covered;
      r.cost = to_rational(ev.cost);
      r.bits = offspring;
      r.parent_cardinality = cur.covered;
      r.accepted = accept;
      r.population_digest = (accept ? offspring : x).fnv1a();
      res.trace.push_back(r);
    }
    if (accept) {
      x = offspring;
      cur = ev;
    }
  }

  res.steps_used = cfg.budget;
  if (best_feasible_cost) {
    res.best_feasible = best_bits;
    res.best_cost = to_rational(*best_feasible_cost);
  }
  res.population_digest = x.fnv1a();
  res.final_population = {x};
  return res;
}

}  // namespace

RunResult opo_ea_run(const SetCoverInstance& inst, const EaConfig& cfg) {
  if (cfg.budget < 1) throw std::invalid_argument("opo_ea_run: budget must be >= 1");
  if (!cfg.force_exact_arithmetic) {
    if (auto scaled = scale_weights(inst)) {
      return opo_run<std::int64_t>(inst, cfg, scaled->num,
                                   Rational(BigInt(1), BigInt(scaled->den)));
    }
  }
  std::vector<Rational> w;
  for (const auto& s : inst.sets()) w.push_back(s.weight);
  return opo_run<Rational>(inst, cfg, w, Rational(1));
}

}  // namespace scw
