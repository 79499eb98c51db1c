#include "scw/semo.hpp"

#include "scw/rng.hpp"

namespace scw {

namespace {

template <class WT>
struct Entry {
  Solution bits;
  WT cost{};
  std::size_t uncovered = 0;
  std::size_t ones = 0;
};

template <class WT>
bool dominates(const Entry<WT>& a, const Entry<WT>& b) {
  if (a.cost < b.cost && a.uncovered <= b.uncovered) return true;
  if (!(b.cost < a.cost) && a.uncovered < b.uncovered) return true;
  return !(a.cost < b.cost) && !(b.cost < a.cost) && a.uncovered == b.uncovered &&
         a.ones < b.ones;
}

template <class WT>
RunResult semo_impl(const SetCoverInstance& inst, const EaConfig& cfg, const std::vector<WT>& w,
                    const Rational& unit, const SemoObserver& observer) {
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

  auto eval = [&](const Solution& x) {
    Entry<WT> e;
    e.bits = x;
    cov.clear();
    for (std::size_t i = 0; i < inst.m(); ++i) {
      if (x.test(i)) {
        e.cost = e.cost + w[i];
        cov |= inst.mask(i);
        ++e.ones;
      }
    }
    e.uncovered = n - cov.count();
    return e;
  };

  std::vector<Entry<WT>> archive;
  archive.push_back(eval(inst.empty_solution()));

  RunResult res;
  res.seed = cfg.seed;

  auto digest = [&]() {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (const auto& e : archive) h = e.bits.fnv1a(h);
    return h;
  };

  auto notify = [&](std::uint64_t step, bool accepted) {
    if (!observer) return;
    std::vector<SemoEntry> view;
    view.reserve(archive.size());
    for (const auto& e : archive) {
      view.push_back(SemoEntry{e.bits, to_rational(e.cost), e.uncovered, e.ones});
    }
    SemoStepView sv{step, accepted, &view};
    observer(sv);
  };

  if (cfg.record_trace) {
    TraceRecord init;
    init.algorithm = "semo";
    init.event = "init";
    init.cardinality = n - archive[0].uncovered;
    init.bits = archive[0].bits;
    init.population_digest = digest();
    res.trace.push_back(init);
  }

  Solution offspring = inst.empty_solution();
  for (std::uint64_t step = 1; step <= cfg.budget; ++step) {
    const auto& parent = archive[rng.below(archive.size())];
    offspring = parent.bits;
    const std::size_t parent_card = n - parent.uncovered;
    mutate_inplace(offspring, cfg.mutation, rng);
    Entry<WT> ev = eval(offspring);

    bool dominated = false;
    bool duplicate = false;
    for (const auto& e : archive) {
      if (dominates(e, ev)) {
        dominated = true;
        break;
      }
      if (e.uncovered == ev.uncovered && e.ones == ev.ones && !(e.cost < ev.cost) &&
          !(ev.cost < e.cost) && e.bits == ev.bits) {
        duplicate = true;
        break;
      }
    }
    const bool accept = !dominated && !duplicate;
    if (accept) {
      std::erase_if(archive, [&](const Entry<WT>& e) { return dominates(ev, e); });
      archive.push_back(std::move(ev));
    }

    if (cfg.record_trace) {
      TraceRecord r;
      r.step = step;
      r.algorithm = "semo";
      r.event = accept ? "accept" : "reject";
      r.cardinality = n - (accept ? archive.back().uncovered : ev.uncovered);
      r.cost = to_rational(accept ? archive.back().cost : ev.cost);
      r.bits = offspring;
      r.parent_cardinality = parent_card;
      r.accepted = accept;
      r.population_digest = digest();
      res.trace.push_back(r);
    }
    notify(step, accept);
  }

  res.steps_used = cfg.budget;
  const Entry<WT>* best = nullptr;
  for (const auto& e : archive) {
    if (e.uncovered == 0 && (!best || e.cost < best->cost)) best = &e;
  }
  if (best) {
    res.best_feasible = best->bits;
    res.best_cost = to_rational(best->cost);
  }
  res.population_digest = digest();
  for (const auto& e : archive) res.final_population.push_back(e.bits);
  return res;
}

}  // namespace

bool dominate(const Solution& x, const Solution& y, const SetCoverInstance& inst) {
  const std::size_t n = static_cast<std::size_t>(inst.n());
  Entry<Rational> a{x, inst.cost(x), n - inst.covered(x).count(), x.count()};
  Entry<Rational> b{y, inst.cost(y), n - inst.covered(y).count(), y.count()};
  return dominates(a, b);
}

RunResult semo_run(const SetCoverInstance& inst, const EaConfig& cfg,
                   const SemoObserver& observer) {
  if (cfg.budget < 1) throw std::invalid_argument("semo_run: budget must be >= 1");
  if (!cfg.force_exact_arithmetic) {
    if (auto scaled = scale_weights(inst)) {
      return semo_impl<std::int64_t>(inst, cfg, scaled->num,
                                     Rational(BigInt(1), BigInt(scaled->den)), observer);
    }
  }
  std::vector<Rational> w;
  for (const auto& s : inst.sets()) w.push_back(s.weight);
  return semo_impl<Rational>(inst, cfg, w, Rational(1), observer);
}

}  // namespace scw
