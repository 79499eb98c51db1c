#include "scw/seip.hpp"

#include <algorithm>

#include "scw/rng.hpp"

namespace scw {

namespace {

template <class WT>
struct Resident {
  Solution bits;
  WT cost{};
  std::size_t ones = 0;
  bool occupied = false;
};

template <class WT>
RunResult seip_impl(const SetCoverInstance& inst, const IsolationFunction& iso,
                    const EaConfig& cfg, const std::vector<WT>& w, const Rational& unit,
                    const SeipObserver& observer) {
  const std::size_t n = static_cast<std::size_t>(inst.n());
  const std::size_t q = static_cast<std::size_t>(iso.q);
  const char* algo = cfg.mutation == MutationKind::kOneBit ? "lseip" : "gseip";
  Rng rng(cfg.seed);
  BitVec cov(n);

  auto to_rational = [&](const WT& c) {
    if constexpr (std::is_same_v<WT, Rational>) {
      return c;
    } else {
      return Rational(BigInt(c)) * unit;
    }
  };

  struct Eval {
    WT cost{};
    std::size_t card = 0;
    std::size_t ones = 0;
  };
  auto eval = [&](const Solution& x) {
    Eval e;
    cov.clear();
    for (std::size_t i = 0; i < inst.m(); ++i) {
      if (x.test(i)) {
        e.cost = e.cost + w[i];
        cov |= inst.mask(i);
        ++e.ones;
      }
    }
    const std::size_t covered = cov.count();
    e.card = iso.kind == IsolationKind::kCoveredElements ? covered : (covered == n ? 1 : 0);
    return e;
  };

  std::vector<Resident<WT>> slots(q + 1);
  std::vector<std::size_t> occupied;  // ascending cardinalities

  auto occupy = [&](std::size_t card, const Solution& bits, const Eval& ev) {
    auto& slot = slots[card];
    if (!slot.occupied) {
      occupied.insert(std::lower_bound(occupied.begin(), occupied.end(), card), card);
      slot.occupied = true;
    }
    slot.bits = bits;
    slot.cost = ev.cost;
    slot.ones = ev.ones;
  };

  {
    Solution empty = inst.empty_solution();
    occupy(0, empty, eval(empty));
  }

  RunResult res;
  res.seed = cfg.seed;

  auto digest = [&]() {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (std::size_t c : occupied) {
      h ^= c + 1;
      h *= 0x100000001B3ULL;
      h = slots[c].bits.fnv1a(h);
    }
    return h;
  };

  std::vector<std::optional<SeipResident>> view;
  auto notify = [&](std::uint64_t step, bool accepted, std::size_t card) {
    if (!observer) return;
    view.assign(q + 1, std::nullopt);
    for (std::size_t c : occupied) {
      view[c] = SeipResident{slots[c].bits, to_rational(slots[c].cost), slots[c].ones};
    }
    SeipStepView sv{step, accepted, card, &view};
    observer(sv);
  };

  if (cfg.record_trace) {
    TraceRecord init;
    init.algorithm = algo;
    init.event = "init";
    init.bits = slots[0].bits;
    init.population_digest = digest();
    res.trace.push_back(init);
  }
  notify(0, true, 0);

  Solution offspring = inst.empty_solution();
  for (std::uint64_t step = 1; step <= cfg.budget; ++step) {
    const std::size_t parent_card = occupied[rng.below(occupied.size())];
    offspring = slots[parent_card].bits;
    mutate_inplace(offspring, cfg.mutation, rng);
    Eval ev = eval(offspring);

    auto& slot = slots[ev.card];
    bool resident_superior =
        slot.occupied && (slot.cost < ev.cost || (!(ev.cost < slot.cost) && slot.ones < ev.ones));
    const bool accept = !resident_superior;
    if (accept) occupy(ev.card, offspring, ev);

    if (cfg.record_trace) {
      TraceRecord r;
      r.step = step;
      r.algorithm = algo;
      r.event = accept ? "accept" : "reject";
      r.cardinality = ev.card;
      r.cost = to_rational(ev.cost);
      r.bits = offspring;
      r.parent_cardinality = parent_card;
      r.accepted = accept;
      r.population_digest = digest();
      res.trace.push_back(r);
    }
    notify(step, accept, ev.card);
  }

  res.steps_used = cfg.budget;
  if (slots[q].occupied) {
    res.best_feasible = slots[q].bits;
    res.best_cost = to_rational(slots[q].cost);
  }
  res.population_digest = digest();
  for (std::size_t c : occupied) res.final_population.push_back(slots[c].bits);
  return res;
}

}  // namespace

bool superior(const Solution& x, const Solution& y, const SetCoverInstance& inst,
              const IsolationFunction& iso) {
  if (isolation_cardinality(inst, iso, x) != isolation_cardinality(inst, iso, y)) return false;
  const Rational cx = inst.cost(x);
  const Rational cy = inst.cost(y);
  if (cx < cy) return true;
  return cx == cy && x.count() < y.count();
}

RunResult seip_run(const SetCoverInstance& inst, const IsolationFunction& iso,
                   const EaConfig& cfg, const SeipObserver& observer) {
  if (cfg.budget < 1) throw std::invalid_argument("seip_run: budget must be >= 1");
  if (iso.kind == IsolationKind::kCoveredElements && iso.q != inst.n()) {
    throw std::invalid_argument("seip_run: covered-elements isolation must have q = n");
  }
  if (!cfg.force_exact_arithmetic) {
    if (auto scaled = scale_weights(inst)) {
      return seip_impl<std::int64_t>(inst, iso, cfg, scaled->num,
                                     Rational(BigInt(1), BigInt(scaled->den)), observer);
    }
  }
  std::vector<Rational> w;
  for (const auto& s : inst.sets()) w.push_back(s.weight);
  return seip_impl<Rational>(inst, iso, cfg, w, Rational(1), observer);
}

}  // namespace scw
