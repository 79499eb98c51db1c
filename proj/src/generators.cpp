#include "scw/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "scw/exact.hpp"
#include "scw/rng.hpp"

namespace scw {

namespace {

/// Uniform grid point lo + (hi - lo) * u/1000, u in [0, 1000].
Rational grid_weight(const Rational& lo, const Rational& hi, Rng& rng) {
  const long long u = static_cast<long long>(rng.below(1001));
  return lo + (hi - lo) * Rational(BigInt(u), BigInt(1000));
}

std::vector<int> shuffled_universe(int n, Rng& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  for (std::size_t i = perm.size(); i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.below(i)]);
  }
  return perm;
}

}  // namespace

ProblemIResult gen_problem_i(const ProblemISpec& spec) {
  if (spec.k < 2) throw std::invalid_argument("problem I: k must be >= 2");
  if (spec.L < 1) throw std::invalid_argument("problem I: L must be >= 1");
  if (!(spec.epsilon > Rational(0))) throw std::invalid_argument("problem I: epsilon must be > 0");

  const Rational column_weight = Rational(1) + spec.epsilon;
  std::vector<SetEntry> sets;
  std::vector<SetEntry> columns;
  for (int i = 0; i < spec.L; ++i) {
    SetEntry col;
    for (int j = 1; j <= spec.k; ++j) col.elements.push_back(i * spec.k + j);
    col.weight = column_weight;
    columns.push_back(col);
    sets.push_back(std::move(col));
  }
  for (int i = 0; i < spec.L; ++i) {
    for (int j = 1; j <= spec.k; ++j) {
      SetEntry single;
      single.elements = {i * spec.k + j};
      single.weight = Rational(BigInt(1), BigInt(j));
      sets.push_back(std::move(single));
    }
  }
  std::string name = "problem-i-k" + std::to_string(spec.k) + "-L" + std::to_string(spec.L) +
                     "-e" + spec.epsilon.numerator().str() + "d" + spec.epsilon.denominator().str();
  ProblemIResult res{SetCoverInstance(spec.k * spec.L, std::move(sets), std::move(name)),
                     std::nullopt, false};
  const bool columns_optimal = spec.epsilon < harmonic(static_cast<unsigned>(spec.k)) - Rational(1);
  if (columns_optimal) {
    res.optimum = KnownOptimum(spec.k * spec.L, std::move(columns));
  } else {
    res.epsilon_warning = true;
  }
  return res;
}

std::string RandomSpec::default_name() const {
  return "random-n" + std::to_string(n) + "-m" + std::to_string(m) + "-k" + std::to_string(k) +
         "-s" + std::to_string(seed);
}

SetCoverInstance gen_random_k_cover(const RandomSpec& spec) {
  if (spec.n < 1 || spec.k < 1) throw std::invalid_argument("random cover: n and k must be >= 1");
  const int chunks = (spec.n + spec.k - 1) / spec.k;
  if (spec.m < chunks) {
    throw std::invalid_argument("random cover: m below ceil(n/k), instance cannot cover");
  }
  if (!(spec.weight_lo > Rational(0)) || spec.weight_hi < spec.weight_lo) {
    throw std::invalid_argument("random cover: weight range must be positive and ordered");
  }
  Rng rng(spec.seed);
  std::vector<SetEntry> sets;

  auto perm = shuffled_universe(spec.n, rng);
  for (int c = 0; c < chunks; ++c) {
    SetEntry e;
    for (int j = c * spec.k; j < std::min((c + 1) * spec.k, spec.n); ++j) {
      e.elements.push_back(perm[static_cast<std::size_t>(j)]);
    }
    e.weight = grid_weight(spec.weight_lo, spec.weight_hi, rng);
    sets.push_back(std::move(e));
  }
  for (int extra = chunks; extra < spec.m; ++extra) {
    const std::size_t size = 1 + rng.below(static_cast<std::uint64_t>(spec.k));
    auto pool = shuffled_universe(spec.n, rng);
    SetEntry e;
    e.elements.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    e.weight = grid_weight(spec.weight_lo, spec.weight_hi, rng);
    sets.push_back(std::move(e));
  }
  return SetCoverInstance(spec.n, std::move(sets), spec.default_name());
}

std::pair<SetCoverInstance, KnownOptimum> gen_known_opt(int k, int L, int extra,
                                                        std::uint64_t seed) {
  if (k < 1 || L < 1) throw std::invalid_argument("known opt: k and L must be >= 1");
  const int n = k * L;
  constexpr int kMaxRetries = 8;
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    const std::uint64_t attempt_seed = attempt == 0 ? seed : Rng::derive(seed,
                                                                         static_cast<std::uint64_t>(attempt));
    Rng rng(attempt_seed);

    auto perm = shuffled_universe(n, rng);
    std::vector<SetEntry> plants;
    Rational max_plant;
    for (int c = 0; c < L; ++c) {
      SetEntry e;
      for (int j = c * k; j < (c + 1) * k; ++j) e.elements.push_back(perm[static_cast<std::size_t>(j)]);
      std::sort(e.elements.begin(), e.elements.end());
      e.weight = grid_weight(Rational(1), Rational(2), rng);
      if (e.weight > max_plant) max_plant = e.weight;
      plants.push_back(std::move(e));
    }
    std::vector<SetEntry> sets = plants;
    const Rational floor_weight = max_plant * Rational(k);
    for (int d = 0; d < extra; ++d) {
      const std::size_t size = 1 + rng.below(static_cast<std::uint64_t>(k));
      auto pool = shuffled_universe(n, rng);
      SetEntry e;
      e.elements.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
      e.weight = floor_weight * grid_weight(Rational(1), Rational(2), rng);
      sets.push_back(std::move(e));
    }
    std::string name = "known-opt-k" + std::to_string(k) + "-L" + std::to_string(L) + "-x" +
                       std::to_string(extra) + "-s" + std::to_string(seed);
    SetCoverInstance inst(n, std::move(sets), std::move(name));
    KnownOptimum opt(n, std::move(plants));
    if (inst.m() <= 24) {
      if (exact_solve(inst).value != opt.value()) continue;
    }
    return {std::move(inst), std::move(opt)};
  }
  throw std::runtime_error("known opt: distractors kept beating the plant; adjust parameters");
}

}  // namespace scw
