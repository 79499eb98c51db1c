#include "scw/certificate.hpp"

#include <stdexcept>

#include "json.hpp"
#include "scw/io.hpp"

namespace scw {

CertificateReport check_path_certificate(const SetCoverInstance& inst,
                                         const PathCertificate& cert,
                                         const IsolationFunction& iso) {
  CertificateReport rep;
  if (cert.steps.empty()) {
    rep.failed_condition = 0;
    rep.detail = "certificate has no steps";
    return rep;
  }
  if (cert.ratios.size() < cert.steps.size()) {
    rep.failed_condition = 0;
    rep.detail = "fewer ratios than steps";
    return rep;
  }
  const std::size_t q = static_cast<std::size_t>(iso.q);
  Solution x = inst.empty_solution();
  std::size_t card = 0;
  Rational cost;

  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& step = cert.steps[i];
    rep.failed_step = i;
    if (step.y_plus.size() != inst.m() || step.y_minus.size() != inst.m()) {
      rep.failed_condition = 0;
      rep.detail = "step bits not bound to the instance";
      return rep;
    }
    if (!step.y_minus.subset_of(x)) {
      rep.failed_condition = 0;
      rep.detail = "y- drops sets that are not selected";
      return rep;
    }
    const std::size_t touched = step.y_plus.count() + step.y_minus.count();
    if (touched < 1 || touched > static_cast<std::size_t>(cert.gap)) {
      rep.failed_condition = 1;
      rep.detail = "step size outside [1, gap]";
      return rep;
    }
    Solution next = (x | step.y_plus) - step.y_minus;
    const Rational next_cost = inst.cost(next);
    if (next_cost - cost > cert.ratios[i] * cert.opt_value) {
      rep.failed_condition = 2;
      rep.detail = "cost increase exceeds ratio * opt";
      return rep;
    }
    const std::size_t next_card = isolation_cardinality(inst, iso, next);
    if (card < q && next_card <= card) {
      rep.failed_condition = 3;
      rep.detail = "isolation cardinality did not increase";
      return rep;
    }
    x = std::move(next);
    card = next_card;
    cost = next_cost;
    rep.ratio_sum += cert.ratios[i];
  }
  if (card != q) {
    rep.failed_condition = 0;
    rep.failed_step = cert.steps.size() - 1;
    rep.detail = "path ends below the feasible isolation";
    return rep;
  }
  rep.valid = true;
  rep.failed_step = 0;
  rep.final_cost = cost;
  rep.final_feasible = inst.is_feasible(x);
  return rep;
}

PathCertificate certificate_from_greedy(const SetCoverInstance& inst, const GreedyResult& greedy,
                                        const Rational& opt) {
  PathCertificate cert;
  cert.gap = 1;
  cert.opt_value = opt;
  for (std::size_t pick : greedy.picks) {
    PathStep step{inst.empty_solution(), inst.empty_solution()};
    step.y_plus.set(pick);
    cert.steps.push_back(std::move(step));
    cert.ratios.push_back(inst.set(pick).weight / opt);
  }
  return cert;
}

PathCertificate certificate_from_trace(const SetCoverInstance& inst, const Trace& trace,
                                       const Rational& opt) {
  PathCertificate cert;
  cert.gap = 1;
  cert.opt_value = opt;
  Solution prev = inst.empty_solution();
  for (const auto& rec : trace) {
    if (rec.event == "init") {
      prev = rec.bits;
      continue;
    }
    if (rec.event != "greedy") {
      throw std::invalid_argument("certificate_from_trace: trace contains non-greedy steps");
    }
    Solution added = rec.bits - prev;
    if (added.count() != 1 || !prev.subset_of(rec.bits)) {
      throw std::invalid_argument("certificate_from_trace: rows do not grow by one set");
    }
    PathStep step{added, inst.empty_solution()};
    cert.steps.push_back(std::move(step));
    const std::size_t pick = added.ones().front();
    cert.ratios.push_back(inst.set(pick).weight / opt);
    prev = rec.bits;
  }
  if (cert.steps.empty()) {
    throw std::invalid_argument("certificate_from_trace: no greedy steps in trace");
  }
  return cert;
}

std::string certificate_to_json(const PathCertificate& cert) {
  nlohmann::ordered_json j;
  j["gap"] = cert.gap;
  j["opt"] = cert.opt_value.str_compact();
  nlohmann::ordered_json ratios = nlohmann::ordered_json::array();
  for (const auto& r : cert.ratios) ratios.push_back(r.str_compact());
  j["ratios"] = std::move(ratios);
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& s : cert.steps) {
    nlohmann::ordered_json js;
    nlohmann::ordered_json plus = nlohmann::ordered_json::array();
    for (auto i : s.y_plus.ones()) plus.push_back(i);
    nlohmann::ordered_json minus = nlohmann::ordered_json::array();
    for (auto i : s.y_minus.ones()) minus.push_back(i);
    js["plus"] = std::move(plus);
    js["minus"] = std::move(minus);
    steps.push_back(std::move(js));
  }
  j["steps"] = std::move(steps);
  return j.dump(2) + "\n";
}

PathCertificate certificate_from_json(const std::string& text, std::size_t m) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
  PathCertificate cert;
  cert.gap = j.at("gap").get<int>();
  auto opt = Rational::parse(j.at("opt").get<std::string>());
  if (!opt) throw std::invalid_argument("certificate: bad opt value");
  cert.opt_value = *opt;
  for (const auto& r : j.at("ratios")) {
    auto v = Rational::parse(r.get<std::string>());
    if (!v) throw std::invalid_argument("certificate: bad ratio");
    cert.ratios.push_back(*v);
  }
  for (const auto& js : j.at("steps")) {
    PathStep step{Solution(m), Solution(m)};
    for (auto i : js.at("plus").get<std::vector<std::size_t>>()) step.y_plus.set(i);
    for (auto i : js.at("minus").get<std::vector<std::size_t>>()) step.y_minus.set(i);
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

void save_certificate(const PathCertificate& cert, const std::filesystem::path& file) {
  io::write_file(file, certificate_to_json(cert));
}

PathCertificate load_certificate(const std::filesystem::path& file, std::size_t m) {
  return certificate_from_json(io::read_file(file), m);
}

}  // namespace scw
