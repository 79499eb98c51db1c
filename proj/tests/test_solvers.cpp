#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>

#include "doctest.h"
#include "helpers.hpp"
#include "scw/closure.hpp"
#include "scw/diagnostics.hpp"
#include "scw/ea.hpp"
#include "scw/exact.hpp"
#include "scw/gaww.hpp"
#include "scw/generators.hpp"
#include "scw/greedy.hpp"
#include "scw/semo.hpp"
#include "scw/seip.hpp"
#include "scw/trace.hpp"

using namespace scw;
using testing::e1;
using testing::solution_of;

namespace {

Rational price_of(const PriceMap& prices, int element) {
  auto p = prices.price.at(static_cast<std::size_t>(element - 1));
  REQUIRE(p.has_value());
  return *p;
}

SetCoverInstance problem_i(int k, int L, const Rational& eps) {
  return gen_problem_i({k, L, eps}).instance;
}

/// Reference GAWW with the same step rules but naive withdrawal
/// enumeration (every subset up to size k, no pruning), all in exact
/// rationals. Small instances only.
struct NaiveGawwStep {
  bool withdrawal;
  std::vector<std::size_t> added;
  std::size_t removed;
};

std::vector<NaiveGawwStep> naive_gaww(const SetCoverInstance& inst) {
  const std::size_t n = static_cast<std::size_t>(inst.n());
  const int k = inst.k();
  const Rational alpha =
      Rational(1) - Rational(BigInt(1), BigInt(static_cast<long long>(k) * k * k));
  BitVec covered(n);
  std::vector<std::size_t> x;
  std::vector<NaiveGawwStep> steps;
  while (covered.count() != n) {
    std::size_t ghat = inst.m();
    Rational rhat;
    for (std::size_t i = 0; i < inst.m(); ++i) {
      auto gain = inst.mask(i).count_diff(covered);
      if (gain == 0) continue;
      Rational r = inst.set(i).weight / Rational(static_cast<long long>(gain));
      if (ghat == inst.m() || r < rhat) {
        ghat = i;
        rhat = r;
      }
    }
    // Enumerate every (S~, Q).
    bool found = false;
    Rational best_r;
    std::vector<std::size_t> best_q;
    std::size_t best_s = 0;
    auto consider = [&](std::size_t s, const std::vector<std::size_t>& q) {
      BitVec uni(n);
      Rational wq;
      for (auto i : q) {
        uni |= inst.mask(i);
        wq += inst.set(i).weight;
      }
      if (!inst.mask(s).subset_of(uni)) return;
      auto newc = uni.count_diff(covered);
      if (newc == 0) return;
      Rational r = (wq - inst.set(s).weight) / Rational(static_cast<long long>(newc));
      if (!(r < alpha * rhat)) return;
      bool better = !found || r < best_r ||
                    (r == best_r && (q.size() < best_q.size() ||
                                     (q.size() == best_q.size() &&
                                      (q < best_q || (q == best_q && s < best_s)))));
      if (better) {
        found = true;
        best_r = r;
        best_q = q;
        best_s = s;
      }
    };
    std::vector<std::size_t> cand;
    for (std::size_t s : x) {
      cand.clear();
      for (std::size_t i = 0; i < inst.m(); ++i) {
        if (std::find(x.begin(), x.end(), i) == x.end()) cand.push_back(i);
      }
      std::vector<std::size_t> q;
      auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!q.empty()) consider(s, q);
        if (static_cast<int>(q.size()) == k) return;
        for (std::size_t j = start; j < cand.size(); ++j) {
          q.push_back(cand[j]);
          self(self, j + 1);
          q.pop_back();
        }
      };
      rec(rec, 0);
    }
    if (found) {
      BitVec uni(n);
      for (auto i : best_q) uni |= inst.mask(i);
      covered |= uni;
      x.erase(std::remove(x.begin(), x.end(), best_s), x.end());
      for (auto i : best_q) x.push_back(i);
      std::sort(x.begin(), x.end());
      steps.push_back({true, best_q, best_s});
    } else {
      covered |= inst.mask(ghat);
      x.push_back(ghat);
      std::sort(x.begin(), x.end());
      steps.push_back({false, {ghat}, 0});
    }
  }
  return steps;
}

}  // namespace

TEST_CASE("greedy on e1: picks, prices, identity") {
  auto inst = e1();
  auto res = greedy_solve(inst);
  CHECK(res.picks == std::vector<std::size_t>{0, 1});
  CHECK(inst.cost(res.solution) == Rational(2));
  CHECK(price_of(res.prices, 1) == Rational::of(1, 2));
  CHECK(price_of(res.prices, 2) == Rational::of(1, 2));
  CHECK(price_of(res.prices, 3) == Rational(1));
  CHECK(res.prices.total() == Rational(2));
  CHECK(res.trace.size() == 3);  // init + two picks
  CHECK(res.trace[1].event == "greedy");
}

TEST_CASE("greedy on a single covering set prices every element at w/n") {
  std::vector<SetEntry> sets{{{1, 2, 3, 4}, Rational(3)}};
  SetCoverInstance inst(4, std::move(sets), "one");
  auto res = greedy_solve(inst);
  CHECK(res.picks == std::vector<std::size_t>{0});
  for (int e = 1; e <= 4; ++e) CHECK(price_of(res.prices, e) == Rational::of(3, 4));
}

TEST_CASE("greedy walks into problem I's trap") {
  auto inst = problem_i(2, 1, Rational::of(1, 10));
  auto res = greedy_solve(inst);
  // Sets: 0 = column {1,2} @ 11/10, 1 = {1} @ 1, 2 = {2} @ 1/2.
  CHECK(res.picks == std::vector<std::size_t>{2, 1});
  CHECK(inst.cost(res.solution) == Rational::of(3, 2));
  CHECK(price_of(res.prices, 2) == Rational::of(1, 2));
  CHECK(price_of(res.prices, 1) == Rational(1));
  const Rational opt = exact_solve(inst).value;
  CHECK(opt == Rational::of(11, 10));
  CHECK(inst.cost(res.solution) / opt == Rational::of(15, 11));
}

TEST_CASE("greedy price identity on random instances") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto inst = gen_random_k_cover({12, 10, 3, Rational(1), Rational(8), seed});
    auto res = greedy_solve(inst);
    CHECK(res.prices.total() == inst.cost(res.solution));
    CHECK(inst.is_feasible(res.solution));
  }
}

TEST_CASE("gaww first step is always greedy") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto inst = gen_random_k_cover({10, 8, 3, Rational(1), Rational(8), seed});
    auto res = gaww_solve(inst);
    REQUIRE(!res.steps.empty());
    CHECK(!res.steps[0].is_withdrawal);
  }
}

TEST_CASE("gaww on e1 matches greedy (no withdrawal beats the threshold)") {
  auto inst = e1();
  auto gaww = gaww_solve(inst);
  auto greedy = greedy_solve(inst);
  CHECK(gaww.withdrawal_count == 0);
  CHECK(gaww.solution == greedy.solution);
  CHECK(inst.cost(gaww.solution) == Rational(2));
}

TEST_CASE("gaww withdraws to the optimum on problem I") {
  auto inst = problem_i(2, 1, Rational::of(1, 10));
  auto res = gaww_solve(inst);
  CHECK(res.withdrawal_count == 1);
  CHECK(res.solution == solution_of(inst, {0}));
  CHECK(inst.cost(res.solution) == Rational::of(11, 10));
  CHECK(price_of(res.prices, 2) == Rational::of(1, 2));
  CHECK(price_of(res.prices, 1) == Rational::of(3, 5));
  CHECK(res.prices.total() == Rational::of(11, 10));
}

TEST_CASE("gaww price identity holds on traces with withdrawals") {
  int with_withdrawals = 0;
  for (int L = 1; L <= 4; ++L) {
    for (int k = 2; k <= 3; ++k) {
      auto inst = problem_i(k, L, Rational::of(1, 10));
      auto res = gaww_solve(inst);
      if (res.withdrawal_count > 0) ++with_withdrawals;
      CHECK(res.prices.total() == inst.cost(res.solution));
      CHECK(inst.is_feasible(res.solution));
    }
  }
  CHECK(with_withdrawals > 0);
}

TEST_CASE("gaww agrees with the naive full enumeration") {
  std::vector<SetCoverInstance> cases;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    cases.push_back(gen_random_k_cover({8, 7, 3, Rational(1), Rational(6), seed}));
  }
  cases.push_back(problem_i(2, 2, Rational::of(1, 10)));
  cases.push_back(problem_i(3, 1, Rational::of(1, 4)));
  cases.push_back(e1());
  for (const auto& inst : cases) {
    CAPTURE(inst.name());
    auto fast = gaww_solve(inst);
    auto naive = naive_gaww(inst);
    REQUIRE(fast.steps.size() == naive.size());
    for (std::size_t i = 0; i < naive.size(); ++i) {
      CHECK(fast.steps[i].is_withdrawal == naive[i].withdrawal);
      CHECK(fast.steps[i].added == naive[i].added);
      if (naive[i].withdrawal) CHECK(*fast.steps[i].removed == naive[i].removed);
    }
  }
}

TEST_CASE("gaww exact-arithmetic path matches the scaled path") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto inst = gen_random_k_cover({10, 9, 3, Rational(1), Rational(6), seed});
    GawwConfig exact_cfg;
    exact_cfg.force_exact_arithmetic = true;
    auto a = gaww_solve(inst);
    auto b = gaww_solve(inst, exact_cfg);
    CHECK(a.solution == b.solution);
    CHECK(trace_to_csv(a.trace) == trace_to_csv(b.trace));
  }
}

TEST_CASE("gaww guards") {
  std::vector<SetEntry> singles{{{1}, Rational(1)}, {{2}, Rational(1)}};
  SetCoverInstance k1(2, std::move(singles), "k1");
  CHECK_THROWS_AS(gaww_solve(k1), std::invalid_argument);

  GawwConfig tiny;
  tiny.enum_budget = 0;
  CHECK_THROWS_AS(gaww_solve(problem_i(2, 1, Rational::of(1, 10)), tiny), GawwEnumerationLimit);

  GawwConfig bad_alpha;
  bad_alpha.alpha = Rational(1);
  CHECK_THROWS_AS(gaww_solve(e1(), bad_alpha), std::invalid_argument);
}

TEST_CASE("opo-ea literal mode from the empty solution never moves") {
  // No single set covers the universe, so every one-bit offspring is
  // infeasible and literal acceptance rejects it.
  auto inst = problem_i(2, 2, Rational::of(1, 10));
  EaConfig cfg;
  cfg.budget = 500;
  cfg.seed = 3;
  cfg.acceptance = Acceptance::kLiteral;
  cfg.record_trace = true;
  auto res = opo_ea_run(inst, cfg);
  CHECK(!res.best_feasible.has_value());
  for (const auto& r : res.trace) {
    if (r.event != "init") CHECK(r.event == "reject");
  }
}

TEST_CASE("opo-ea literal accepts only feasible non-worsening offspring") {
  auto inst = e1();
  EaConfig cfg;
  cfg.budget = 2000;
  cfg.seed = 9;
  cfg.acceptance = Acceptance::kLiteral;
  cfg.init = InitKind::kRandom;
  cfg.record_trace = true;
  auto res = opo_ea_run(inst, cfg);
  std::optional<Rational> last;
  for (const auto& r : res.trace) {
    if (r.event != "accept") continue;
    CHECK(r.cardinality == 3);  // feasible
    if (last) CHECK(!(last < r.cost));
    last = r.cost;
  }
}

TEST_CASE("opo-ea penalty mode reaches the single covering set") {
  std::vector<SetEntry> sets{{{1, 2}, Rational(4)}};
  SetCoverInstance inst(2, std::move(sets), "m1");
  EaConfig cfg;
  cfg.budget = 50;
  cfg.seed = 1;
  cfg.acceptance = Acceptance::kPenalty;
  auto res = opo_ea_run(inst, cfg);
  REQUIRE(res.best_feasible.has_value());
  CHECK(res.best_cost == Rational(4));
}

TEST_CASE("opo-ea penalty fitness never increases along accepted steps") {
  auto inst = problem_i(2, 2, Rational::of(1, 10));
  const Rational unit = Rational(inst.n()) * inst.max_weight();
  EaConfig cfg;
  cfg.budget = 3000;
  cfg.seed = 17;
  cfg.acceptance = Acceptance::kPenalty;
  cfg.record_trace = true;
  auto res = opo_ea_run(inst, cfg);
  std::optional<Rational> last;
  for (const auto& r : res.trace) {
    if (r.event != "accept" && r.event != "init") continue;
    Rational g = r.cost + unit * Rational(static_cast<long long>(
                              static_cast<std::size_t>(inst.n()) - r.cardinality));
    if (last) CHECK(!(*last < g));
    last = g;
  }
}

TEST_CASE("dominate rules") {
  // A fixture with duplicate singletons so equal objective pairs exist:
  // 0: {1} w=2, 1: {1} w=1, 2: {1} w=1, 3: {1,2} w=3.
  std::vector<SetEntry> sets{
      {{1}, Rational(2)}, {{1}, Rational(1)}, {{1}, Rational(1)}, {{1, 2}, Rational(3)}};
  SetCoverInstance inst(2, std::move(sets), "dups");

  // Rule 1: strictly cheaper, no more uncovered.
  CHECK(dominate(solution_of(inst, {1}), solution_of(inst, {0}), inst));
  // Rule 2: same cost, strictly fewer uncovered.
  CHECK(dominate(solution_of(inst, {3}), solution_of(inst, {0, 1}), inst));
  // Rule 3: equal objectives, fewer sets.
  CHECK(dominate(solution_of(inst, {0}), solution_of(inst, {1, 2}), inst));
  // Never against itself (rule 3 needs strictly fewer bits).
  CHECK(!dominate(solution_of(inst, {1}), solution_of(inst, {1}), inst));
  // Incomparable pair.
  CHECK(!dominate(solution_of(inst, {1}), solution_of(inst, {3}), inst));
  CHECK(!dominate(solution_of(inst, {3}), solution_of(inst, {1}), inst));
}

TEST_CASE("dominate on the canonical objective tuples") {
  // 0: {1,2} w=1, 1: {3} w=1, 2: {3} w=1, 3: {1,2} w=2,
  // 4: {1} w=1/2, 5: {2} w=1/2, 6: {1,2,3,4} w=10.
  std::vector<SetEntry> sets{{{1, 2}, Rational(1)},      {{3}, Rational(1)},
                             {{3}, Rational(1)},         {{1, 2}, Rational(2)},
                             {{1}, Rational::of(1, 2)},  {{2}, Rational::of(1, 2)},
                             {{1, 2, 3, 4}, Rational(10)}};
  SetCoverInstance inst(4, std::move(sets), "tuples");
  // (1,2,|1|) vs (2,3,|2|): rule 1.
  CHECK(dominate(solution_of(inst, {0}), solution_of(inst, {1, 2}), inst));
  // (1,2) vs (1,3): rule 2.
  CHECK(dominate(solution_of(inst, {0}), solution_of(inst, {1}), inst));
  // (1,3) vs (2,2): incomparable both directions.
  CHECK(!dominate(solution_of(inst, {1}), solution_of(inst, {3}), inst));
  CHECK(!dominate(solution_of(inst, {3}), solution_of(inst, {1}), inst));
  // (1,2,|1|) vs (1,2,|2|): rule 3.
  CHECK(dominate(solution_of(inst, {0}), solution_of(inst, {4, 5}), inst));
  CHECK(!dominate(solution_of(inst, {4, 5}), solution_of(inst, {0}), inst));
}

TEST_CASE("semo keeps the empty solution and a mutually non-dominated archive") {
  auto inst = problem_i(2, 2, Rational::of(1, 10));
  EaConfig cfg;
  cfg.budget = 4000;
  cfg.seed = 21;
  cfg.mutation = MutationKind::kBitWise;
  bool empty_always_present = true;
  bool mutually_nondominated = true;
  SemoObserver obs = [&](const SemoStepView& view) {
    bool has_empty = false;
    const auto& archive = *view.archive;
    for (const auto& e : archive) {
      if (e.ones == 0) has_empty = true;
    }
    if (!has_empty) empty_always_present = false;
    for (std::size_t i = 0; i < archive.size() && mutually_nondominated; ++i) {
      for (std::size_t j = 0; j < archive.size(); ++j) {
        if (i == j) continue;
        const auto& a = archive[i];
        const auto& b = archive[j];
        const bool dom = (a.cost < b.cost && a.uncovered <= b.uncovered) ||
                         (a.cost <= b.cost && a.uncovered < b.uncovered) ||
                         (a.cost == b.cost && a.uncovered == b.uncovered && a.ones < b.ones);
        if (dom) {
          mutually_nondominated = false;
          break;
        }
      }
    }
  };
  auto res = semo_run(inst, cfg, obs);
  CHECK(empty_always_present);
  CHECK(mutually_nondominated);
  REQUIRE(res.best_feasible.has_value());
  CHECK(inst.is_feasible(*res.best_feasible));
}

TEST_CASE("superior examples") {
  auto inst = e1();
  auto iso = IsolationFunction::covered_elements(inst);
  // Same cardinality ({1,2} covered), costs 1 < 5/2.
  CHECK(superior(solution_of(inst, {0}), solution_of(inst, {0, 2}), inst, iso) ==
        false);  // different cardinality? no: {0,2} covers 3 elements
  CHECK(superior(solution_of(inst, {0}), solution_of(inst, {2}), inst, iso) == false);
  // Build equal-cardinality pairs explicitly.
  std::vector<SetEntry> sets{
      {{1}, Rational(2)}, {{1}, Rational(3)}, {{1}, Rational(2)}, {{1, 2}, Rational(1)}};
  SetCoverInstance dup(2, std::move(sets), "dup2");
  auto iso2 = IsolationFunction::covered_elements(dup);
  CHECK(superior(solution_of(dup, {0}), solution_of(dup, {1}), dup, iso2));   // cost 2 < 3
  CHECK(!superior(solution_of(dup, {1}), solution_of(dup, {0}), dup, iso2));
  CHECK(superior(solution_of(dup, {0}), solution_of(dup, {0, 2}), dup, iso2));  // equal cost 2=2? no: 2 vs 4
  CHECK(superior(solution_of(dup, {3}), solution_of(dup, {0}), dup, iso2) == false);  // |mu| differs
  // Equal cost, fewer sets wins.
  std::vector<SetEntry> tri{{{1}, Rational(2)}, {{1}, Rational(1)}, {{1}, Rational(1)}};
  SetCoverInstance tri_inst(1, std::move(tri), "tri");
  auto iso3 = IsolationFunction::covered_elements(tri_inst);
  CHECK(superior(solution_of(tri_inst, {0}), solution_of(tri_inst, {1, 2}), tri_inst, iso3));
}

TEST_CASE("seip population invariants") {
  auto inst = problem_i(3, 2, Rational::of(1, 10));
  auto iso = IsolationFunction::covered_elements(inst);
  EaConfig cfg;
  cfg.budget = 20000;
  cfg.seed = 5;
  cfg.mutation = MutationKind::kBitWise;

  std::size_t max_pop = 0;
  bool one_per_cardinality = true;
  bool cost_monotone = true;
  bool q_resident_persists = true;
  bool seen_q = false;
  std::map<std::size_t, Rational> slot_cost;
  SeipObserver obs = [&](const SeipStepView& view) {
    const auto& pop = *view.population;
    std::size_t count = 0;
    for (std::size_t c = 0; c < pop.size(); ++c) {
      if (!pop[c]) continue;
      ++count;
      auto it = slot_cost.find(c);
      if (it != slot_cost.end() && it->second < pop[c]->cost) cost_monotone = false;
      slot_cost[c] = pop[c]->cost;
    }
    max_pop = std::max(max_pop, count);
    if (pop.back().has_value()) seen_q = true;
    if (seen_q && !pop.back().has_value()) q_resident_persists = false;
    one_per_cardinality = one_per_cardinality && count == slot_cost.size();
  };
  auto res = seip_run(inst, iso, cfg, obs);
  CHECK(max_pop <= static_cast<std::size_t>(iso.q) + 1);
  CHECK(cost_monotone);
  CHECK(q_resident_persists);
  CHECK(seen_q);
  REQUIRE(res.best_feasible.has_value());
  CHECK(inst.is_feasible(*res.best_feasible));
}

TEST_CASE("seip with the feasibility isolation keeps at most two residents") {
  auto inst = e1();
  auto iso = IsolationFunction::feasibility();
  EaConfig cfg;
  cfg.budget = 3000;
  cfg.seed = 13;
  cfg.mutation = MutationKind::kBitWise;
  std::size_t max_pop = 0;
  SeipObserver obs = [&](const SeipStepView& view) {
    std::size_t count = 0;
    for (const auto& r : *view.population) {
      if (r) ++count;
    }
    max_pop = std::max(max_pop, count);
  };
  auto res = seip_run(inst, iso, cfg, obs);
  CHECK(max_pop <= 2);
  REQUIRE(res.best_feasible.has_value());
  CHECK(res.best_cost == Rational(2));  // optimum of e1
}

TEST_CASE("gseip finds the problem I optimum on nearly every seed") {
  auto inst = problem_i(2, 1, Rational::of(1, 10));
  auto iso = IsolationFunction::covered_elements(inst);
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    EaConfig cfg;
    cfg.budget = 100000;
    cfg.seed = seed;
    cfg.mutation = MutationKind::kBitWise;
    auto res = seip_run(inst, iso, cfg);
    if (res.best_feasible && res.best_cost == Rational::of(11, 10)) ++hits;
  }
  CHECK(hits >= 95);
}

TEST_CASE("solver replay determinism") {
  auto inst = problem_i(2, 2, Rational::of(1, 10));
  auto iso = IsolationFunction::covered_elements(inst);
  EaConfig cfg;
  cfg.budget = 2000;
  cfg.seed = 77;
  cfg.record_trace = true;

  auto opo1 = opo_ea_run(inst, cfg), opo2 = opo_ea_run(inst, cfg);
  CHECK(trace_to_csv(opo1.trace) == trace_to_csv(opo2.trace));
  CHECK(opo1.population_digest == opo2.population_digest);

  auto semo1 = semo_run(inst, cfg), semo2 = semo_run(inst, cfg);
  CHECK(trace_to_csv(semo1.trace) == trace_to_csv(semo2.trace));
  CHECK(semo1.population_digest == semo2.population_digest);

  auto seip1 = seip_run(inst, iso, cfg), seip2 = seip_run(inst, iso, cfg);
  CHECK(trace_to_csv(seip1.trace) == trace_to_csv(seip2.trace));
  CHECK(seip1.population_digest == seip2.population_digest);

  // A different seed yields a different walk (the final population may
  // still coincide once every isolation is fully optimized).
  cfg.seed = 78;
  auto seip3 = seip_run(inst, iso, cfg);
  CHECK(trace_to_csv(seip1.trace) != trace_to_csv(seip3.trace));
}

TEST_CASE("seip vs semo population comparison diagnostic") {
  auto inst = problem_i(2, 2, Rational::of(1, 10));
  auto iso = IsolationFunction::covered_elements(inst);
  EaConfig cfg;
  cfg.budget = 8000;
  cfg.seed = 31;
  cfg.mutation = MutationKind::kBitWise;
  auto seip = seip_run(inst, iso, cfg);
  auto semo = semo_run(inst, cfg);
  auto cmp = compare_populations(inst, seip, semo);
  CHECK(cmp.semo_size == semo.final_population.size());
  CHECK(cmp.matched + cmp.unmatched == cmp.semo_size);
  CHECK(!cmp.summary().empty());
  // No invariant asserted on matched/unmatched: the retention claim is
  // about the frameworks, not individual runs.
}

TEST_CASE("gaww partial-cover disjointness diagnostic is exposed") {
  // On the subset closure of problem I the partial cover stays disjoint.
  auto gen = gen_problem_i({2, 2, Rational::of(1, 10)});
  auto ext = extend_closure(gen.instance);
  auto res = gaww_solve(ext);
  CHECK(res.overlap_steps == 0);
}

TEST_CASE("seip scaled and exact arithmetic agree") {
  auto inst = problem_i(3, 2, Rational::of(1, 100));
  auto iso = IsolationFunction::covered_elements(inst);
  EaConfig cfg;
  cfg.budget = 3000;
  cfg.seed = 41;
  cfg.record_trace = true;
  auto fast = seip_run(inst, iso, cfg);
  cfg.force_exact_arithmetic = true;
  auto exact = seip_run(inst, iso, cfg);
  CHECK(trace_to_csv(fast.trace) == trace_to_csv(exact.trace));
}
