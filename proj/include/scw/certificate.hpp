#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "scw/greedy.hpp"
#include "scw/instance.hpp"
#include "scw/isolation.hpp"
#include "scw/trace.hpp"

namespace scw {

/// One jump of a path: add the sets of y_plus, drop those of y_minus.
struct PathStep {
  Solution y_plus;
  Solution y_minus;
};

/// Certificate of a non-negligible path: replaying `steps` from the
/// empty solution must make the isolation cardinality climb to q, each
/// step touching at most `gap` bits and paying at most ratios[i] * opt.
/// The sum of ratios is the approximation bound the path certifies.
struct PathCertificate {
  std::vector<PathStep> steps;
  int gap = 1;
  std::vector<Rational> ratios;  // one entry per step
  Rational opt_value;
};

struct CertificateReport {
  bool valid = false;
  /// 1, 2, 3 for the path conditions; 0 for a structural fault.
  int failed_condition = 0;
  std::size_t failed_step = 0;
  std::string detail;
  Rational ratio_sum;      // sum of per-step ratios (the implied bound)
  Rational final_cost;
  bool final_feasible = false;
};

/// Replays the certificate and checks per step: (1) 1 <= |y+|+|y-| <=
/// gap, (2) the cost increase is at most ratios[i] * opt, (3) the
/// isolation cardinality strictly increases while below q. Dropping
/// sets not currently selected is a structural fault, as is a path that
/// ends infeasible.
CertificateReport check_path_certificate(const SetCoverInstance& inst,
                                         const PathCertificate& cert,
                                         const IsolationFunction& iso);

/// Gap-1 certificate following a greedy run: step i adds pick i and
/// claims ratio (cost delta) / opt.
PathCertificate certificate_from_greedy(const SetCoverInstance& inst, const GreedyResult& greedy,
                                        const Rational& opt);

/// Same construction recovered from a greedy trace file's rows (each
/// row's solution bits must extend the previous row by one set).
PathCertificate certificate_from_trace(const SetCoverInstance& inst, const Trace& trace,
                                       const Rational& opt);

std::string certificate_to_json(const PathCertificate& cert);
PathCertificate certificate_from_json(const std::string& text, std::size_t m);

void save_certificate(const PathCertificate& cert, const std::filesystem::path& file);
PathCertificate load_certificate(const std::filesystem::path& file, std::size_t m);

}  // namespace scw
