#pragma once

#include <vector>

#include "scw/instance.hpp"
#include "scw/rational.hpp"

namespace scw {

/// A disjoint k-set optimal solution in the normal form used by the
/// price audit: L pairwise-disjoint columns of size k covering the
/// universe, each with its weight. column_of(e) and weight_of(e) give
/// the column containing element e and that column's weight.
class KnownOptimum {
 public:
  KnownOptimum(int n, std::vector<SetEntry> columns);

  const std::vector<SetEntry>& columns() const { return columns_; }
  const Rational& value() const { return value_; }
  int k() const { return k_; }

  int column_of(int element) const { return column_of_.at(static_cast<std::size_t>(element - 1)); }
  const Rational& weight_of(int element) const {
    return columns_[static_cast<std::size_t>(column_of(element))].weight;
  }
  const std::vector<int>& column_elements(int element) const {
    return columns_[static_cast<std::size_t>(column_of(element))].elements;
  }

 private:
  std::vector<SetEntry> columns_;
  std::vector<int> column_of_;  // element-1 -> column index
  Rational value_;
  int k_ = 0;
};

}  // namespace scw
