#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scw/instance.hpp"
#include "scw/known_optimum.hpp"
#include "scw/trace.hpp"

namespace scw {

struct PriceAuditRow {
  int element = 0;
  Rational price;
  /// Uncovered elements of the element's optimal column, besides the
  /// element itself, when it was covered.
  int others_uncovered = 0;
  Rational bound;  // w*(e) / (others_uncovered + 1)
  bool audited = false;  // false for elements priced by withdrawal steps
  bool pass = false;
};

struct PriceAuditReport {
  std::vector<PriceAuditRow> rows;
  bool all_pass = false;
  bool sum_matches_cost = false;
  Rational price_sum;
  Rational final_cost;
  std::size_t unaudited = 0;  // elements covered by withdrawal steps
  std::string error;          // nonempty when the trace/prices are inconsistent

  bool ok() const { return error.empty() && all_pass && sum_matches_cost; }

  std::string to_csv() const;
  std::string to_json() const;
};

/// Checks each greedy-covered element's price against the bound
/// w*(e) / (N(e)+1) implied by the planted disjoint k-set optimum, and
/// the identity sum(price) = final cost. Elements first covered by a
/// withdrawal step are reported unaudited; the identity still covers
/// them. The trace must be a greedy or gaww trace with an init row.
PriceAuditReport price_audit(const SetCoverInstance& inst, const PriceMap& prices,
                             const Trace& trace, const KnownOptimum& known);

}  // namespace scw
