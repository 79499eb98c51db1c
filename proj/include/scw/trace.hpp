#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "scw/bits.hpp"
#include "scw/rational.hpp"

namespace scw {

/// One step of a solver run. `event` is "init", "greedy", "withdrawal",
/// "accept" or "reject"; `cardinality` is the isolation cardinality of
/// the step's solution (covered-element count for the cover solvers).
struct TraceRecord {
  std::uint64_t step = 0;
  std::string algorithm;
  std::string event;
  std::size_t cardinality = 0;
  Rational cost;
  Solution bits;
  std::size_t parent_cardinality = 0;
  bool accepted = false;
  std::uint64_t population_digest = 0;
};

using Trace = std::vector<TraceRecord>;

/// Outcome of a stochastic solver run. The trace is populated only when
/// the configuration asks for it; the digest is always filled so replay
/// determinism can be checked cheaply.
struct RunResult {
  std::optional<Solution> best_feasible;
  Rational best_cost;
  std::uint64_t steps_used = 0;
  std::uint64_t seed = 0;
  Trace trace;
  std::uint64_t population_digest = 0;
  /// Final population, one entry per retained solution.
  std::vector<Solution> final_population;
};

/// Price of each element, assigned once when the element is first
/// covered. Positions are element-1; unpriced elements are nullopt.
struct PriceMap {
  std::vector<std::optional<Rational>> price;

  explicit PriceMap(std::size_t n = 0) : price(n) {}

  Rational total() const {
    Rational t;
    for (const auto& p : price) {
      if (p) t += *p;
    }
    return t;
  }
};

/// Trace CSV: header step,algorithm,event,cardinality,cost_num,cost_den,
/// solution_bits_hex; one row per record.
std::string trace_to_csv(const Trace& trace);
Trace trace_from_csv(const std::string& text, std::size_t m);

/// Price CSV: header element,price_num,price_den.
std::string prices_to_csv(const PriceMap& prices);
PriceMap prices_from_csv(const std::string& text, std::size_t n);

void save_trace(const Trace& trace, const std::filesystem::path& file);
Trace load_trace(const std::filesystem::path& file, std::size_t m);
void save_prices(const PriceMap& prices, const std::filesystem::path& file);
PriceMap load_prices(const std::filesystem::path& file, std::size_t n);

std::filesystem::path prices_path(const std::filesystem::path& trace_file);

}  // namespace scw
