#include "scw/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "scw/budget_expr.hpp"
#include "scw/closure.hpp"
#include "scw/ea.hpp"
#include "scw/exact.hpp"
#include "scw/gaww.hpp"
#include "scw/generators.hpp"
#include "scw/greedy.hpp"
#include "scw/io.hpp"
#include "scw/reference.hpp"
#include "scw/semo.hpp"
#include "scw/seip.hpp"

namespace scw {

namespace {

using nlohmann::ordered_json;

Rational parse_rational_field(const ordered_json& j, const char* what) {
  if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    if (auto r = Rational::parse(j.get<std::string>())) return *r;
  }
  throw std::invalid_argument(std::string(what) + " must be an integer or \"p/q\"");
}

std::string decimal15(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", r.to_double());
  return buf;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const std::string& text,
                                             const std::filesystem::path& base_dir) {
  ordered_json j = ordered_json::parse(text);
  ExperimentConfig cfg;
  cfg.name = j.value("name", std::string("experiment"));
  if (j.contains("instance")) {
    const auto& inst = j.at("instance");
    if (inst.contains("file")) {
      std::filesystem::path p = inst.at("file").get<std::string>();
      cfg.instance_file = p.is_absolute() ? p : base_dir / p;
    } else if (inst.contains("generator")) {
      cfg.generator_json = inst.at("generator").dump();
    } else {
      throw std::invalid_argument("experiment: instance needs a \"file\" or \"generator\"");
    }
  } else {
    throw std::invalid_argument("experiment: missing \"instance\"");
  }
  if (!j.contains("algorithms") || !j.at("algorithms").is_array() || j.at("algorithms").empty()) {
    throw std::invalid_argument("experiment: \"algorithms\" must be a nonempty array");
  }
  for (const auto& ja : j.at("algorithms")) {
    AlgorithmSpec spec;
    spec.algorithm = ja.at("algorithm").get<std::string>();
    if (ja.contains("budget")) {
      if (ja.at("budget").is_number_integer()) {
        spec.budget = std::to_string(ja.at("budget").get<std::int64_t>());
      } else {
        spec.budget = ja.at("budget").get<std::string>();
      }
    }
    if (ja.contains("mutation")) {
      const auto mu = ja.at("mutation").get<std::string>();
      if (mu == "one-bit") {
        spec.mutation = MutationKind::kOneBit;
      } else if (mu == "bit-wise") {
        spec.mutation = MutationKind::kBitWise;
      } else {
        throw std::invalid_argument("experiment: mutation must be one-bit or bit-wise");
      }
    }
    if (ja.contains("acceptance")) {
      const auto ac = ja.at("acceptance").get<std::string>();
      if (ac == "literal") {
        spec.acceptance = Acceptance::kLiteral;
      } else if (ac == "penalty") {
        spec.acceptance = Acceptance::kPenalty;
      } else {
        throw std::invalid_argument("experiment: acceptance must be literal or penalty");
      }
    }
    if (ja.contains("init")) {
      const auto in = ja.at("init").get<std::string>();
      if (in == "empty") {
        spec.init = InitKind::kEmpty;
      } else if (in == "random") {
        spec.init = InitKind::kRandom;
      } else {
        throw std::invalid_argument("experiment: init must be empty or random");
      }
    }
    spec.extend = ja.value("extend", false);
    if (ja.contains("threshold")) spec.threshold = parse_rational_field(ja.at("threshold"), "threshold");
    cfg.algorithms.push_back(std::move(spec));
  }
  cfg.runs = j.value("runs", 1);
  if (cfg.runs < 1) throw std::invalid_argument("experiment: runs must be >= 1");
  cfg.base_seed = j.value("base_seed", std::uint64_t{0});
  if (!j.contains("output")) throw std::invalid_argument("experiment: missing \"output\"");
  std::filesystem::path out = j.at("output").get<std::string>();
  cfg.output = out.is_absolute() ? out : base_dir / out;
  cfg.oracle_limit = j.value("oracle_limit", std::size_t{24});
  return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& file) {
  return from_json(io::read_file(file), file.has_parent_path() ? file.parent_path()
                                                               : std::filesystem::path("."));
}

std::pair<SetCoverInstance, std::optional<KnownOptimum>> generate_from_json(
    const std::string& spec_json) {
  ordered_json j = ordered_json::parse(spec_json);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "problem-i") {
    ProblemISpec spec;
    spec.k = j.at("k").get<int>();
    spec.L = j.at("L").get<int>();
    spec.epsilon = parse_rational_field(j.at("epsilon"), "epsilon");
    auto res = gen_problem_i(spec);
    return {std::move(res.instance), std::move(res.optimum)};
  }
  if (kind == "random-k") {
    RandomSpec spec;
    spec.n = j.at("n").get<int>();
    spec.m = j.at("m").get<int>();
    spec.k = j.at("k").get<int>();
    spec.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("weight_lo")) spec.weight_lo = parse_rational_field(j.at("weight_lo"), "weight_lo");
    if (j.contains("weight_hi")) spec.weight_hi = parse_rational_field(j.at("weight_hi"), "weight_hi");
    return {gen_random_k_cover(spec), std::nullopt};
  }
  if (kind == "known-opt") {
    auto [inst, opt] = gen_known_opt(j.at("k").get<int>(), j.at("L").get<int>(),
                                     j.at("extra").get<int>(), j.at("seed").get<std::uint64_t>());
    return {std::move(inst), std::move(opt)};
  }
  throw std::invalid_argument("generator kind must be problem-i, random-k or known-opt");
}

std::pair<SetCoverInstance, std::optional<KnownOptimum>> resolve_instance(
    const ExperimentConfig& cfg) {
  if (cfg.instance_file) {
    SetCoverInstance inst = io::load_instance(*cfg.instance_file);
    std::optional<KnownOptimum> opt;
    auto sidecar = io::sidecar_path(*cfg.instance_file);
    if (std::filesystem::exists(sidecar)) opt = io::load_optimum(sidecar, inst.n());
    return {std::move(inst), std::move(opt)};
  }
  return generate_from_json(cfg.generator_json);
}

std::string ResultRow::csv_header() {
  return "instance,algorithm,seed,steps_used,cost,opt,ratio,ratio_decimal,feasible,wall_ms";
}

std::string ResultRow::to_csv() const {
  std::ostringstream out;
  out << instance << ',' << algorithm << ',' << seed << ',' << steps_used << ',';
  if (cost) out << cost->str();
  out << ',';
  if (opt) out << opt->str();
  out << ',';
  if (ratio) out << ratio->str();
  out << ',';
  if (ratio) out << decimal15(*ratio);
  out << ',' << (feasible ? 1 : 0) << ',' << wall_ms;
  if (!error.empty()) {
    std::string clean = error;
    std::replace(clean.begin(), clean.end(), ',', ';');
    std::replace(clean.begin(), clean.end(), '\n', ' ');
    out << "  # error: " << clean;
  }
  return out.str();
}

namespace {

struct Cell {
  std::size_t algo_index;
  int run;
};

ResultRow run_cell(const SetCoverInstance& base, const SetCoverInstance& solved,
                   const std::optional<Rational>& opt, const AlgorithmSpec& spec,
                   std::uint64_t seed, std::size_t oracle_limit) {
  ResultRow row;
  row.instance = base.name();
  row.algorithm = spec.algorithm;
  row.seed = seed;
  const auto t0 = std::chrono::steady_clock::now();

  std::optional<Rational> cost;
  if (spec.algorithm == "greedy") {
    auto res = greedy_solve(solved);
    cost = solved.cost(res.solution);
    row.steps_used = res.picks.size();
  } else if (spec.algorithm == "gaww") {
    auto res = gaww_solve(solved);
    cost = solved.cost(res.solution);
    row.steps_used = res.steps.size();
  } else if (spec.algorithm == "exact") {
    auto res = exact_solve(solved, oracle_limit);
    cost = res.value;
    row.steps_used = res.nodes;
  } else {
    EaConfig ea;
    if (spec.budget.empty()) {
      throw std::invalid_argument(spec.algorithm + " needs a budget");
    }
    ea.budget = eval_budget_expr(spec.budget, solved.n(),
                                 static_cast<long long>(solved.m()), solved.k());
    ea.seed = seed;
    ea.mutation = spec.mutation;
    ea.acceptance = spec.acceptance;
    ea.init = spec.init;
    RunResult res;
    if (spec.algorithm == "opo-ea") {
      res = opo_ea_run(solved, ea);
    } else if (spec.algorithm == "semo") {
      res = semo_run(solved, ea);
    } else if (spec.algorithm == "lseip" || spec.algorithm == "gseip") {
      ea.mutation = spec.algorithm == "lseip" ? MutationKind::kOneBit : MutationKind::kBitWise;
      res = seip_run(solved, IsolationFunction::covered_elements(solved), ea);
    } else {
      throw std::invalid_argument("unknown algorithm: " + spec.algorithm);
    }
    row.steps_used = res.steps_used;
    if (res.best_feasible) cost = res.best_cost;
  }

  row.feasible = cost.has_value();
  row.cost = cost;
  row.opt = opt;
  if (cost && opt) row.ratio = approximation_ratio(*cost, *opt);
  row.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return row;
}

}  // namespace

ExperimentOutcome run_experiment(const ExperimentConfig& cfg, int jobs) {
  auto [instance, known] = resolve_instance(cfg);
  std::optional<Rational> opt;
  if (known) {
    opt = known->value();
  } else if (instance.m() <= cfg.oracle_limit) {
    opt = exact_solve(instance, cfg.oracle_limit).value;
  }

  // Closure-extended variants are shared by the cells that need them.
  std::vector<const SetCoverInstance*> solved_view(cfg.algorithms.size(), &instance);
  std::optional<SetCoverInstance> extended;
  for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
    if (cfg.algorithms[a].extend) {
      if (!extended) extended = extend_closure(instance);
      solved_view[a] = &*extended;
    }
  }

  std::vector<Cell> cells;
  for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
    for (int run = 0; run < cfg.runs; ++run) cells.push_back(Cell{a, run});
  }
  std::vector<ResultRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};

  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      const Cell& cell = cells[i];
      const AlgorithmSpec& spec = cfg.algorithms[cell.algo_index];
      const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(cell.run);
      try {
        rows[i] = run_cell(instance, *solved_view[cell.algo_index], opt, spec, seed,
                           cfg.oracle_limit);
      } catch (const std::exception& e) {
        ResultRow row;
        row.instance = instance.name();
        row.algorithm = spec.algorithm;
        row.seed = seed;
        row.error = e.what();
        rows[i] = std::move(row);
        failed = true;
      }
    }
  };

  const int thread_count = std::max(1, std::min<int>(jobs, static_cast<int>(cells.size())));
  if (thread_count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::ostringstream out;
  out << "# experiment " << cfg.name << " base_seed=" << cfg.base_seed << " runs=" << cfg.runs
      << "\n";
  out << ResultRow::csv_header() << "\n";
  for (const auto& row : rows) out << row.to_csv() << "\n";

  // Aggregates per algorithm over rows with a known ratio.
  for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
    const auto& spec = cfg.algorithms[a];
    std::vector<Rational> ratios;
    int feasible_count = 0;
    int success = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].algo_index != a || !rows[i].error.empty()) continue;
      if (rows[i].feasible) ++feasible_count;
      if (rows[i].ratio) {
        ratios.push_back(*rows[i].ratio);
        if (spec.threshold && !(*spec.threshold < *rows[i].ratio)) ++success;
      }
    }
    out << "# aggregate algorithm=" << spec.algorithm << " cells=" << cfg.runs
        << " feasible=" << feasible_count;
    if (!ratios.empty()) {
      std::sort(ratios.begin(), ratios.end());
      const Rational& min = ratios.front();
      const Rational& max = ratios.back();
      const Rational& median = ratios[(ratios.size() - 1) / 2];  // lower median
      out << " min_ratio=" << min.str() << " median_ratio=" << median.str()
          << " max_ratio=" << max.str();
    }
    if (spec.threshold) {
      Rational frac(BigInt(success), BigInt(cfg.runs));
      out << " threshold=" << spec.threshold->str() << " success=" << success << "/" << cfg.runs
          << " success_decimal=" << decimal15(frac);
    }
    out << "\n";
  }
  ExperimentOutcome outcome;
  outcome.aborted = failed.load();
  if (outcome.aborted) out << "# aborted: one or more cells failed; partial results above\n";
  outcome.rows = std::move(rows);
  outcome.rendered = out.str();
  io::write_file(cfg.output, outcome.rendered);
  return outcome;
}

std::string strip_timing_column(const std::string& results_csv) {
  std::istringstream in(results_csv);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#' && line.rfind("instance,", 0) != 0) {
      auto comma = line.find_last_of(',');
      if (comma != std::string::npos) line.erase(comma);
    }
    out << line << "\n";
  }
  return out.str();
}

int default_jobs() {
  if (const char* env = std::getenv("SCW_JOBS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

}  // namespace scw
