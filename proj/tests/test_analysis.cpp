#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "scw/audit.hpp"
#include "scw/certificate.hpp"
#include "scw/exact.hpp"
#include "scw/gaww.hpp"
#include "scw/generators.hpp"
#include "scw/greedy.hpp"
#include "scw/reference.hpp"

using namespace scw;
using testing::e1;
using testing::random_solution;
using testing::solution_of;

namespace {

/// Unpruned oracle for the exact solver: every subset, no cuts.
Rational full_enumeration_opt(const SetCoverInstance& inst) {
  REQUIRE(inst.m() <= 16);
  std::optional<Rational> best;
  for (std::uint64_t pick = 0; pick < (1ULL << inst.m()); ++pick) {
    Solution x = inst.empty_solution();
    for (std::size_t i = 0; i < inst.m(); ++i) {
      if (pick & (1ULL << i)) x.set(i);
    }
    if (!inst.is_feasible(x)) continue;
    Rational c = inst.cost(x);
    if (!best || c < *best) best = c;
  }
  REQUIRE(best.has_value());
  return *best;
}

}  // namespace

TEST_CASE("exact solver on e1 and the single-set instance") {
  auto inst = e1();
  auto res = exact_solve(inst);
  CHECK(res.value == Rational(2));
  CHECK(res.solution == solution_of(inst, {0, 1}));

  std::vector<SetEntry> one{{{1, 2}, Rational::of(7, 3)}};
  SetCoverInstance single(2, std::move(one), "single");
  auto sres = exact_solve(single);
  CHECK(sres.value == Rational::of(7, 3));
  CHECK(sres.solution == solution_of(single, {0}));
}

TEST_CASE("exact solver refuses oversized instances") {
  auto inst = gen_random_k_cover({30, 28, 3, Rational(1), Rational(5), 1});
  CHECK_THROWS_AS(exact_solve(inst), OracleRefusal);
}

TEST_CASE("exact solver matches unpruned enumeration on random instances") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomSpec spec{10, 9, 3, Rational(1), Rational(9), seed};
    if (seed % 3 == 0) spec.k = 2, spec.m = 12;
    auto inst = gen_random_k_cover(spec);
    CAPTURE(seed);
    CHECK(exact_solve(inst).value == full_enumeration_opt(inst));
  }
}

TEST_CASE("exact solver on problem I picks all columns") {
  for (int k = 2; k <= 3; ++k) {
    for (int L = 1; L <= 3; ++L) {
      auto gen = gen_problem_i({k, L, Rational::of(1, 10)});
      auto res = exact_solve(gen.instance);
      CHECK(res.value == Rational(L) * Rational::of(11, 10));
      // The all-columns solution occupies the first L bits.
      Solution columns = gen.instance.empty_solution();
      for (int i = 0; i < L; ++i) columns.set(static_cast<std::size_t>(i));
      CHECK(res.solution == columns);
      REQUIRE(gen.optimum.has_value());
      CHECK(gen.optimum->value() == res.value);
    }
  }
}

TEST_CASE("approximation ratio") {
  CHECK(approximation_ratio(Rational(2), Rational(2)) == Rational(1));
  CHECK(approximation_ratio(Rational(3), Rational(2)) == Rational::of(3, 2));
  CHECK_THROWS_AS(approximation_ratio(Rational(1), Rational(0)), std::domain_error);

  // Greedy on problem I (k=3, L=2, eps=1/10) lands at H_3 / (1 + eps).
  auto gen = gen_problem_i({3, 2, Rational::of(1, 10)});
  auto res = greedy_solve(gen.instance);
  auto ratio = approximation_ratio(gen.instance.cost(res.solution), gen.optimum->value());
  CHECK(ratio == Rational::of(5, 3));
  CHECK(ratio == harmonic(3) / (Rational(1) + Rational::of(1, 10)));
}

TEST_CASE("linear partial reference") {
  auto ref = make_linear_reference(3, Rational(2));
  REQUIRE(ref.profile.size() == 4);
  CHECK(ref.at(0) == Rational(0));
  CHECK(ref.at(1) == Rational::of(2, 3));
  CHECK(ref.at(2) == Rational::of(4, 3));
  CHECK(ref.at(3) == Rational(2));
  for (int q = 1; q <= 6; ++q) {
    auto r = make_linear_reference(q, Rational::of(7, 5));
    CHECK(r.at(static_cast<std::size_t>(q)) == Rational::of(7, 5));
    CHECK(r.at(0) == Rational(0));
  }
  CHECK_THROWS_AS(make_linear_reference(0, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(make_linear_reference(3, Rational(0)), std::invalid_argument);
}

TEST_CASE("optimum-prefix reference on e1") {
  auto inst = e1();
  auto opt = exact_solve(inst);
  auto ref = make_optimum_prefix_reference(inst, opt.solution);
  CHECK(ref.at(0) == Rational(0));
  CHECK(ref.at(1) == Rational(1));
  CHECK(ref.at(2) == Rational(1));
  CHECK(ref.at(3) == Rational(2));
  for (std::size_t j = 0; j < 3; ++j) CHECK(!(ref.at(j + 1) < ref.at(j)));
}

TEST_CASE("partial ratio on e1") {
  auto inst = e1();
  auto iso = IsolationFunction::covered_elements(inst);
  auto ref = make_linear_reference(3, Rational(2));
  CHECK(partial_ratio(inst, inst.empty_solution(), ref, iso) == Rational(0));
  CHECK(partial_ratio(inst, solution_of(inst, {1}), ref, iso) == Rational::of(3, 2));
  // Feasible case coincides with the approximation ratio.
  auto feas = solution_of(inst, {0, 1});
  CHECK(partial_ratio(inst, feas, ref, iso) ==
        approximation_ratio(inst.cost(feas), Rational(2)));
  auto all = solution_of(inst, {0, 1, 2});
  CHECK(partial_ratio(inst, all, ref, iso) ==
        approximation_ratio(inst.cost(all), Rational(2)));
}

TEST_CASE("conditional partial ratio on e1") {
  auto inst = e1();
  auto iso = IsolationFunction::covered_elements(inst);
  auto ref = make_linear_reference(3, Rational(2));
  // x = {S2}, y = {S1}: (2-1) / (L(3)-L(1)) = 1 / (4/3) = 3/4.
  CHECK(conditional_partial_ratio(inst, solution_of(inst, {1}), solution_of(inst, {0}), ref,
                                  iso) == Rational::of(3, 4));
  // Conditioning on the empty solution is the plain partial ratio.
  CHECK(conditional_partial_ratio(inst, inst.empty_solution(), solution_of(inst, {1}), ref,
                                  iso) == partial_ratio(inst, solution_of(inst, {1}), ref, iso));
  // y inside x adds nothing.
  CHECK_THROWS_AS(conditional_partial_ratio(inst, solution_of(inst, {0, 1}),
                                            solution_of(inst, {0}), ref, iso),
                  std::domain_error);
}

TEST_CASE("partial ratio decomposition holds on random pairs") {
  auto inst = gen_random_k_cover({10, 9, 3, Rational(1), Rational(6), 15});
  auto iso = IsolationFunction::covered_elements(inst);
  auto opt = exact_solve(inst).value;
  auto ref = make_linear_reference(inst.n(), opt);
  Rng rng(123);
  int checked = 0;
  while (checked < 10000) {
    Solution x = random_solution(inst, rng);
    Solution y = random_solution(inst, rng);
    if (isolation_cardinality(inst, iso, x) == 0) continue;
    Solution joint = x | y;
    if (isolation_cardinality(inst, iso, joint) == isolation_cardinality(inst, iso, x)) continue;
    ++checked;
    Rational lhs = partial_ratio(inst, joint, ref, iso);
    Rational rhs = std::max(partial_ratio(inst, x, ref, iso),
                            conditional_partial_ratio(inst, x, y, ref, iso));
    CHECK(!(rhs < lhs));
  }
}

TEST_CASE("path certificate on e1") {
  auto inst = e1();
  auto iso = IsolationFunction::covered_elements(inst);
  PathCertificate cert;
  cert.gap = 1;
  cert.opt_value = Rational(2);
  cert.ratios = {Rational::of(1, 2), Rational::of(1, 2)};
  cert.steps.push_back({solution_of(inst, {0}), inst.empty_solution()});
  cert.steps.push_back({solution_of(inst, {1}), inst.empty_solution()});
  auto rep = check_path_certificate(inst, cert, iso);
  CHECK(rep.valid);
  CHECK(rep.ratio_sum == Rational(1));
  CHECK(rep.final_feasible);
  CHECK(rep.final_cost == Rational(2));
  // Achieved ratio matches the certified bound here.
  CHECK(approximation_ratio(rep.final_cost, cert.opt_value) == rep.ratio_sum);
}

TEST_CASE("path certificate violations are reported by condition") {
  auto inst = e1();
  auto iso = IsolationFunction::covered_elements(inst);
  {
    PathCertificate cert;
    cert.gap = 1;
    cert.opt_value = Rational(2);
    cert.ratios = {Rational(1)};
    cert.steps.push_back({inst.empty_solution(), inst.empty_solution()});  // empty step
    auto rep = check_path_certificate(inst, cert, iso);
    CHECK(!rep.valid);
    CHECK(rep.failed_condition == 1);
  }
  {
    // Cost of S3 (5/2) exceeds ratio * opt = 1.
    PathCertificate cert;
    cert.gap = 1;
    cert.opt_value = Rational(2);
    cert.ratios = {Rational::of(1, 2)};
    cert.steps.push_back({solution_of(inst, {2}), inst.empty_solution()});
    auto rep = check_path_certificate(inst, cert, iso);
    CHECK(!rep.valid);
    CHECK(rep.failed_condition == 2);
  }
  {
    // Second step re-adds S1: no cardinality progress.
    PathCertificate cert;
    cert.gap = 1;
    cert.opt_value = Rational(2);
    cert.ratios = {Rational(1), Rational(1)};
    cert.steps.push_back({solution_of(inst, {0}), inst.empty_solution()});
    cert.steps.push_back({solution_of(inst, {0}), inst.empty_solution()});
    auto rep = check_path_certificate(inst, cert, iso);
    CHECK(!rep.valid);
    CHECK(rep.failed_condition == 3);
  }
  {
    // Dropping a set that is not selected is structural.
    PathCertificate cert;
    cert.gap = 2;
    cert.opt_value = Rational(2);
    cert.ratios = {Rational(2)};
    cert.steps.push_back({solution_of(inst, {0}), solution_of(inst, {1})});
    auto rep = check_path_certificate(inst, cert, iso);
    CHECK(!rep.valid);
    CHECK(rep.failed_condition == 0);
  }
  {
    // A path that stops below q is rejected.
    PathCertificate cert;
    cert.gap = 1;
    cert.opt_value = Rational(2);
    cert.ratios = {Rational(1)};
    cert.steps.push_back({solution_of(inst, {0}), inst.empty_solution()});
    auto rep = check_path_certificate(inst, cert, iso);
    CHECK(!rep.valid);
    CHECK(rep.failed_condition == 0);
  }
}

TEST_CASE("greedy runs convert to valid gap-1 certificates") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = gen_random_k_cover({12, 10, 3, Rational(1), Rational(8), seed});
    auto iso = IsolationFunction::covered_elements(inst);
    auto opt = exact_solve(inst).value;
    auto greedy = greedy_solve(inst);
    auto cert = certificate_from_greedy(inst, greedy, opt);
    auto rep = check_path_certificate(inst, cert, iso);
    CAPTURE(seed);
    CHECK(rep.valid);
    // Soundness: the certified bound covers the achieved ratio and
    // stays within the greedy guarantee.
    CHECK(!(rep.ratio_sum < approximation_ratio(rep.final_cost, opt)));
    CHECK(!(harmonic(static_cast<unsigned>(inst.k())) < rep.ratio_sum));
  }
}

TEST_CASE("certificates survive the json round trip") {
  auto inst = e1();
  auto greedy = greedy_solve(inst);
  auto cert = certificate_from_greedy(inst, greedy, Rational(2));
  auto text = certificate_to_json(cert);
  auto back = certificate_from_json(text, inst.m());
  CHECK(certificate_to_json(back) == text);
  auto iso = IsolationFunction::covered_elements(inst);
  CHECK(check_path_certificate(inst, back, iso).valid);
}

TEST_CASE("trace-derived certificates match greedy-derived ones") {
  auto inst = gen_random_k_cover({10, 8, 3, Rational(1), Rational(5), 4});
  auto greedy = greedy_solve(inst);
  auto opt = exact_solve(inst).value;
  auto a = certificate_from_greedy(inst, greedy, opt);
  auto b = certificate_from_trace(inst, greedy.trace, opt);
  CHECK(certificate_to_json(a) == certificate_to_json(b));
}

TEST_CASE("price audit on problem I matches the hand-checked bounds") {
  auto gen = gen_problem_i({2, 1, Rational::of(1, 10)});
  REQUIRE(gen.optimum.has_value());
  auto res = greedy_solve(gen.instance);
  auto rep = price_audit(gen.instance, res.prices, res.trace, *gen.optimum);
  REQUIRE(rep.error.empty());
  CHECK(rep.ok());
  REQUIRE(rep.rows.size() == 2);
  // Element 2 is covered first: price 1/2 against bound (11/10)/2.
  CHECK(rep.rows[0].element == 2);
  CHECK(rep.rows[0].price == Rational::of(1, 2));
  CHECK(rep.rows[0].bound == Rational::of(11, 20));
  CHECK(rep.rows[1].element == 1);
  CHECK(rep.rows[1].price == Rational(1));
  CHECK(rep.rows[1].bound == Rational::of(11, 10));
  CHECK(rep.price_sum == rep.final_cost);
}

TEST_CASE("price audit is tight on an all-singleton optimum") {
  auto [inst, opt] = gen_known_opt(1, 5, 0, 3);
  auto res = greedy_solve(inst);
  auto rep = price_audit(inst, res.prices, res.trace, opt);
  CHECK(rep.ok());
  for (const auto& row : rep.rows) {
    CHECK(row.others_uncovered == 0);
    CHECK(row.price == row.bound);  // each column has exactly one element
  }
}

TEST_CASE("price audit flags withdrawal steps as unaudited but keeps the identity") {
  auto gen = gen_problem_i({2, 2, Rational::of(1, 10)});
  auto res = gaww_solve(gen.instance);
  REQUIRE(res.withdrawal_count > 0);
  auto rep = price_audit(gen.instance, res.prices, res.trace, *gen.optimum);
  REQUIRE(rep.error.empty());
  CHECK(rep.sum_matches_cost);
  CHECK(rep.unaudited > 0);
}

TEST_CASE("price audit reports unpriced covered elements") {
  auto inst = e1();
  auto res = greedy_solve(inst);
  std::vector<SetEntry> cols{{{1, 2, 3}, Rational(2)}};
  KnownOptimum fake(3, std::move(cols));
  PriceMap broken = res.prices;
  broken.price[0].reset();
  auto rep = price_audit(inst, broken, res.trace, fake);
  CHECK(!rep.error.empty());
  CHECK(!rep.ok());
}

TEST_CASE("audit reports render to csv and json") {
  auto gen = gen_problem_i({2, 1, Rational::of(1, 10)});
  auto res = greedy_solve(gen.instance);
  auto rep = price_audit(gen.instance, res.prices, res.trace, *gen.optimum);
  auto csv = rep.to_csv();
  CHECK(csv.find("element,price,others_uncovered,bound,audited,pass") == 0);
  CHECK(csv.find("identity=pass") != std::string::npos);
  auto json = rep.to_json();
  CHECK(json.find("\"pass\": true") != std::string::npos);
  CHECK(json.find("\"rows\"") != std::string::npos);
}

TEST_CASE("known optimum invariants are enforced") {
  CHECK_THROWS(KnownOptimum(4, {{{1, 2}, Rational(1)}, {{2, 3}, Rational(1)}}));  // overlap
  CHECK_THROWS(KnownOptimum(4, {{{1, 2}, Rational(1)}}));                         // not covering
  CHECK_THROWS(KnownOptimum(4, {{{1, 2}, Rational(1)}, {{3}, Rational(1)}}));     // mixed sizes
  KnownOptimum ok(4, {{{1, 2}, Rational(1)}, {{3, 4}, Rational::of(3, 2)}});
  CHECK(ok.value() == Rational::of(5, 2));
  CHECK(ok.column_of(3) == 1);
  CHECK(ok.weight_of(4) == Rational::of(3, 2));
}
