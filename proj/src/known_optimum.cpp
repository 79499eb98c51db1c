#include "scw/known_optimum.hpp"

#include <stdexcept>

namespace scw {

KnownOptimum::KnownOptimum(int n, std::vector<SetEntry> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw std::invalid_argument("known optimum: no columns");
  column_of_.assign(static_cast<std::size_t>(n), -1);
  k_ = static_cast<int>(columns_[0].elements.size());
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    const auto& col = columns_[c];
    if (static_cast<int>(col.elements.size()) != k_) {
      throw std::invalid_argument("known optimum: columns must share one size k");
    }
    if (!(col.weight > Rational(0))) throw std::invalid_argument("known optimum: weight <= 0");
    for (int e : col.elements) {
      if (e < 1 || e > n) throw std::invalid_argument("known optimum: element out of range");
      auto& slot = column_of_[static_cast<std::size_t>(e - 1)];
      if (slot != -1) throw std::invalid_argument("known optimum: columns overlap");
      slot = static_cast<int>(c);
    }
    value_ += col.weight;
  }
  for (int slot : column_of_) {
    if (slot == -1) throw std::invalid_argument("known optimum: columns do not cover the universe");
  }
}

}  // namespace scw
