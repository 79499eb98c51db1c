#include "scw/audit.hpp"

#include <sstream>

#include "json.hpp"

namespace scw {

PriceAuditReport price_audit(const SetCoverInstance& inst, const PriceMap& prices,
                             const Trace& trace, const KnownOptimum& known) {
  PriceAuditReport rep;
  const std::size_t n = static_cast<std::size_t>(inst.n());
  if (prices.price.size() != n) {
    rep.error = "price map not bound to the instance";
    return rep;
  }

  // Replay coverage from the trace's solution bits.
  BitVec covered(n);
  bool have_rows = false;
  bool all_pass = true;
  for (const auto& rec : trace) {
    if (rec.event == "init") {
      covered = inst.covered(rec.bits);
      continue;
    }
    if (rec.event != "greedy" && rec.event != "withdrawal") {
      rep.error = "trace is not a greedy/gaww trace";
      return rep;
    }
    have_rows = true;
    BitVec now = inst.covered(rec.bits);
    // GAWW withdrawals may drop sets; newly covered is tracked against
    // the running union, which never shrinks.
    BitVec newly = now - covered;
    for (std::size_t e0 : newly.ones()) {
      const int e = static_cast<int>(e0) + 1;
      PriceAuditRow row;
      row.element = e;
      if (!prices.price[e0]) {
        rep.error = "element " + std::to_string(e) + " covered but unpriced";
        return rep;
      }
      row.price = *prices.price[e0];
      int others = 0;
      for (int other : known.column_elements(e)) {
        if (other != e && !covered.test(static_cast<std::size_t>(other - 1))) ++others;
      }
      row.others_uncovered = others;
      row.bound = known.weight_of(e) / Rational(static_cast<long long>(others + 1));
      if (rec.event == "greedy") {
        row.audited = true;
        row.pass = !(row.bound < row.price);
        if (!row.pass) all_pass = false;
      } else {
        ++rep.unaudited;
      }
      rep.rows.push_back(std::move(row));
    }
    covered |= now;
    rep.final_cost = rec.cost;
  }
  if (!have_rows) {
    rep.error = "trace has no covering steps";
    return rep;
  }
  if (covered.count() != n) {
    rep.error = "trace does not cover the universe";
    return rep;
  }
  for (std::size_t e0 = 0; e0 < n; ++e0) {
    if (prices.price[e0]) rep.price_sum += *prices.price[e0];
  }
  rep.sum_matches_cost = rep.price_sum == rep.final_cost;
  rep.all_pass = all_pass;
  return rep;
}

std::string PriceAuditReport::to_json() const {
  nlohmann::ordered_json j;
  j["pass"] = ok();
  j["sum_price"] = price_sum.str_compact();
  j["final_cost"] = final_cost.str_compact();
  j["identity"] = sum_matches_cost;
  j["unaudited"] = unaudited;
  if (!error.empty()) j["error"] = error;
  nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["element"] = r.element;
    row["price"] = r.price.str_compact();
    row["others_uncovered"] = r.others_uncovered;
    row["bound"] = r.bound.str_compact();
    row["audited"] = r.audited;
    row["pass"] = r.pass;
    rows_json.push_back(std::move(row));
  }
  j["rows"] = std::move(rows_json);
  return j.dump(2) + "\n";
}

std::string PriceAuditReport::to_csv() const {
  std::ostringstream out;
  out << "element,price,others_uncovered,bound,audited,pass\n";
  for (const auto& r : rows) {
    out << r.element << ',' << r.price.str() << ',' << r.others_uncovered << ','
        << r.bound.str() << ',' << (r.audited ? 1 : 0) << ',' << (r.pass ? 1 : 0) << '\n';
  }
  out << "# sum_price=" << price_sum.str() << " final_cost=" << final_cost.str()
      << " identity=" << (sum_matches_cost ? "pass" : "fail")
      << " audited_pass=" << (all_pass ? "pass" : "fail") << " unaudited=" << unaudited << '\n';
  return out.str();
}

}  // namespace scw
