#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "scw/ea_config.hpp"
#include "scw/instance.hpp"
#include "scw/known_optimum.hpp"

namespace scw {

struct AlgorithmSpec {
  std::string algorithm;  // greedy | gaww | opo-ea | semo | lseip | gseip | exact
  std::string budget;     // integer or expression in n, m, k; EAs only
  MutationKind mutation = MutationKind::kOneBit;  // opo-ea / semo
  Acceptance acceptance = Acceptance::kPenalty;   // opo-ea
  InitKind init = InitKind::kEmpty;               // opo-ea
  bool extend = false;                            // apply subset closure first
  std::optional<Rational> threshold;              // success = ratio <= threshold
};

/// Parsed experiment configuration. The instance comes from a file or
/// an inline generator spec; every (algorithm x run) cell executes with
/// seed base_seed + run, and rows appear in configuration order
/// regardless of the jobs count.
struct ExperimentConfig {
  std::string name;
  std::optional<std::filesystem::path> instance_file;
  std::string generator_json;  // inline generator spec, empty if file-based
  std::vector<AlgorithmSpec> algorithms;
  int runs = 1;
  std::uint64_t base_seed = 0;
  std::filesystem::path output;
  std::size_t oracle_limit = 24;

  static ExperimentConfig from_json(const std::string& text,
                                    const std::filesystem::path& base_dir);
  static ExperimentConfig load(const std::filesystem::path& file);
};

struct ResultRow {
  std::string instance;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::uint64_t steps_used = 0;
  std::optional<Rational> cost;
  std::optional<Rational> opt;
  std::optional<Rational> ratio;
  bool feasible = false;
  long long wall_ms = 0;
  std::string error;

  std::string to_csv() const;
  static std::string csv_header();
};

struct ExperimentOutcome {
  std::vector<ResultRow> rows;
  std::string rendered;  // exact content written to the output file
  bool aborted = false;
};

/// Runs every cell (possibly across `jobs` threads), writes the result
/// table to cfg.output and returns it. Output is byte-stable across
/// repetitions and jobs counts except for the trailing wall_ms column.
ExperimentOutcome run_experiment(const ExperimentConfig& cfg, int jobs = 1);

/// Materializes the configured instance (and its known optimum, when
/// one exists). Exposed for the CLI and tests.
std::pair<SetCoverInstance, std::optional<KnownOptimum>> resolve_instance(
    const ExperimentConfig& cfg);

/// Generator spec shared by the CLI and experiment configs:
/// {"kind": "problem-i", "k", "L", "epsilon"} |
/// {"kind": "random-k", "n", "m", "k", "seed" [, "weight_lo", "weight_hi"]} |
/// {"kind": "known-opt", "k", "L", "extra", "seed"}.
std::pair<SetCoverInstance, std::optional<KnownOptimum>> generate_from_json(
    const std::string& spec_json);

/// Drops the trailing wall_ms field of every data row; comparing two
/// stripped outputs checks determinism without the timing noise.
std::string strip_timing_column(const std::string& results_csv);

/// Default jobs count: the SCW_JOBS environment variable, else 1.
int default_jobs();

}  // namespace scw
