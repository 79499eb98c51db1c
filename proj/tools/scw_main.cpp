#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "scw/budget_expr.hpp"
#include "scw/certificate.hpp"
#include "scw/closure.hpp"
#include "scw/audit.hpp"
#include "scw/ea.hpp"
#include "scw/exact.hpp"
#include "scw/experiment.hpp"
#include "scw/gaww.hpp"
#include "scw/generators.hpp"
#include "scw/greedy.hpp"
#include "scw/io.hpp"
#include "scw/reference.hpp"
#include "scw/semo.hpp"
#include "scw/seip.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitOracleRefusal = 4;

scw::Rational parse_rational_arg(const std::string& text, const std::string& flag) {
  auto r = scw::Rational::parse(text);
  if (!r) throw CLI::ValidationError(flag, "expected an integer or \"p/q\"");
  return *r;
}

int cmd_generate(const std::string& kind, int k, int L, const std::string& epsilon, int n, int m,
                 int extra, std::uint64_t seed, const std::string& weight_lo,
                 const std::string& weight_hi, const std::string& out) {
  nlohmann::ordered_json spec;
  spec["kind"] = kind;
  if (kind == "problem-i") {
    spec["k"] = k;
    spec["L"] = L;
    spec["epsilon"] = epsilon;
  } else if (kind == "random-k") {
    spec["n"] = n;
    spec["m"] = m;
    spec["k"] = k;
    spec["seed"] = seed;
    if (!weight_lo.empty()) spec["weight_lo"] = weight_lo;
    if (!weight_hi.empty()) spec["weight_hi"] = weight_hi;
  } else {
    spec["k"] = k;
    spec["L"] = L;
    spec["extra"] = extra;
    spec["seed"] = seed;
  }
  auto [inst, opt] = scw::generate_from_json(spec.dump());
  scw::io::save_instance(inst, out);
  if (opt) scw::io::save_optimum(inst.name(), *opt, scw::io::sidecar_path(out));
  std::cout << "instance=" << inst.name() << " n=" << inst.n() << " m=" << inst.m()
            << " k=" << inst.k();
  if (opt) std::cout << " opt=" << opt->value().str();
  std::cout << " file=" << out << "\n";
  if (!opt && kind == "problem-i") {
    std::cerr << "warning: epsilon >= H_k - 1, the columns are no longer the optimum; "
                 "no sidecar written\n";
  }
  return kExitOk;
}

struct SolveArgs {
  std::string algorithm;
  std::string instance;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string budget;
  bool extend = false;
  std::string trace_path;
  std::string acceptance = "penalty";
  std::string init = "empty";
  std::string mutation = "one-bit";
  std::string isolation = "covered";
  std::size_t oracle_limit = 24;
};

int cmd_solve(const SolveArgs& args) {
  scw::SetCoverInstance original = scw::io::load_instance(args.instance);
  std::optional<scw::SetCoverInstance> extended;
  if (args.extend) extended = scw::extend_closure(original);
  const scw::SetCoverInstance& inst = extended ? *extended : original;

  // Closure preserves the optimal cost, so the sidecar/oracle value of
  // the original instance prices both.
  std::optional<scw::Rational> opt;
  auto sidecar = scw::io::sidecar_path(args.instance);
  if (std::filesystem::exists(sidecar)) {
    opt = scw::io::load_optimum(sidecar, original.n()).value();
  } else if (args.algorithm != "exact" && original.m() <= args.oracle_limit) {
    opt = scw::exact_solve(original, args.oracle_limit).value;
  }

  scw::ResultRow row;
  row.instance = original.name();
  row.algorithm = args.algorithm;
  row.seed = args.seed;

  scw::Trace trace;
  std::optional<scw::PriceMap> prices;
  std::optional<scw::Rational> cost;

  const bool is_ea = args.algorithm == "opo-ea" || args.algorithm == "semo" ||
                     args.algorithm == "lseip" || args.algorithm == "gseip";
  if (is_ea && (!args.seed_set || args.budget.empty())) {
    std::cerr << "error: " << args.algorithm << " requires --seed and --budget\n";
    return kExitUsage;
  }

  if (args.algorithm == "greedy") {
    auto res = scw::greedy_solve(inst);
    cost = inst.cost(res.solution);
    row.steps_used = res.picks.size();
    trace = std::move(res.trace);
    prices = std::move(res.prices);
  } else if (args.algorithm == "gaww") {
    auto res = scw::gaww_solve(inst);
    cost = inst.cost(res.solution);
    row.steps_used = res.steps.size();
    trace = std::move(res.trace);
    prices = std::move(res.prices);
  } else if (args.algorithm == "exact") {
    auto res = scw::exact_solve(inst, args.oracle_limit);
    cost = res.value;
    row.steps_used = res.nodes;
    opt = res.value;
  } else if (is_ea) {
    scw::EaConfig ea;
    ea.budget = scw::eval_budget_expr(args.budget, inst.n(), static_cast<long long>(inst.m()),
                                      inst.k());
    ea.seed = args.seed;
    ea.record_trace = !args.trace_path.empty();
    ea.acceptance = args.acceptance == "literal" ? scw::Acceptance::kLiteral
                                                 : scw::Acceptance::kPenalty;
    ea.init = args.init == "random" ? scw::InitKind::kRandom : scw::InitKind::kEmpty;
    ea.mutation =
        args.mutation == "bit-wise" ? scw::MutationKind::kBitWise : scw::MutationKind::kOneBit;
    scw::RunResult res;
    if (args.algorithm == "opo-ea") {
      res = scw::opo_ea_run(inst, ea);
    } else if (args.algorithm == "semo") {
      res = scw::semo_run(inst, ea);
    } else {
      ea.mutation = args.algorithm == "lseip" ? scw::MutationKind::kOneBit
                                              : scw::MutationKind::kBitWise;
      auto iso = args.isolation == "feasibility" ? scw::IsolationFunction::feasibility()
                                                 : scw::IsolationFunction::covered_elements(inst);
      res = scw::seip_run(inst, iso, ea);
    }
    row.steps_used = res.steps_used;
    if (res.best_feasible) cost = res.best_cost;
    trace = std::move(res.trace);
  } else {
    std::cerr << "error: unknown algorithm " << args.algorithm << "\n";
    return kExitUsage;
  }

  if (!args.trace_path.empty() && !trace.empty()) {
    scw::save_trace(trace, args.trace_path);
    if (prices) scw::save_prices(*prices, scw::prices_path(args.trace_path));
  }

  row.feasible = cost.has_value();
  row.cost = cost;
  row.opt = opt;
  if (cost && opt) row.ratio = scw::approximation_ratio(*cost, *opt);
  std::cout << scw::ResultRow::csv_header() << "\n" << row.to_csv() << "\n";
  return row.feasible ? kExitOk : kExitInfeasible;
}

int cmd_experiment(const std::string& config_path, int jobs) {
  auto cfg = scw::ExperimentConfig::load(config_path);
  auto outcome = scw::run_experiment(cfg, jobs);
  std::cout << outcome.rendered;
  std::cout << "wrote " << cfg.output.string() << "\n";
  return outcome.aborted ? 1 : kExitOk;
}

int cmd_verify(const std::string& kind, const std::string& instance_path,
               const std::string& certificate_path, const std::string& trace_path,
               const std::string& prices_arg, const std::string& optimum_arg,
               const std::string& opt_arg, std::size_t oracle_limit) {
  scw::SetCoverInstance inst = scw::io::load_instance(instance_path);

  auto resolve_opt = [&]() -> scw::Rational {
    if (!opt_arg.empty()) return parse_rational_arg(opt_arg, "--opt");
    auto sidecar = scw::io::sidecar_path(instance_path);
    if (std::filesystem::exists(sidecar)) {
      return scw::io::load_optimum(sidecar, inst.n()).value();
    }
    return scw::exact_solve(inst, oracle_limit).value;
  };

  if (kind == "certificate" || kind == "trace-cert") {
    scw::PathCertificate cert =
        kind == "certificate"
            ? scw::load_certificate(certificate_path, inst.m())
            : scw::certificate_from_trace(inst, scw::load_trace(trace_path, inst.m()),
                                          resolve_opt());
    auto iso = scw::IsolationFunction::covered_elements(inst);
    auto rep = scw::check_path_certificate(inst, cert, iso);
    if (rep.valid) {
      std::cout << "certificate: PASS ratio_sum=" << rep.ratio_sum.str()
                << " final_cost=" << rep.final_cost.str() << "\n";
      return kExitOk;
    }
    std::cout << "certificate: FAIL step=" << rep.failed_step
              << " condition=" << rep.failed_condition << " (" << rep.detail << ")\n";
    return 1;
  }
  if (kind == "audit") {
    std::string optimum_path = optimum_arg;
    if (optimum_path.empty()) optimum_path = scw::io::sidecar_path(instance_path).string();
    auto known = scw::io::load_optimum(optimum_path, inst.n());
    auto trace = scw::load_trace(trace_path, inst.m());
    std::string prices_file = prices_arg;
    if (prices_file.empty()) prices_file = scw::prices_path(trace_path).string();
    auto prices = scw::load_prices(prices_file, static_cast<std::size_t>(inst.n()));
    auto rep = scw::price_audit(inst, prices, trace, known);
    std::cout << rep.to_csv();
    if (rep.ok()) {
      std::cout << "audit: PASS\n";
      return kExitOk;
    }
    std::cout << "audit: FAIL";
    if (!rep.error.empty()) std::cout << " (" << rep.error << ")";
    std::cout << "\n";
    return 1;
  }
  std::cerr << "error: --kind must be certificate, trace-cert or audit\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scw: a weighted set cover workbench (greedy, GAWW, EAs, audits)"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write an instance file (+ optimum sidecar)");
  std::string g_kind, g_epsilon, g_wlo, g_whi, g_out;
  int g_k = 2, g_L = 1, g_n = 0, g_m = 0, g_extra = 0;
  std::uint64_t g_seed = 0;
  gen->add_option("--kind", g_kind, "problem-i | random-k | known-opt")->required();
  gen->add_option("--k", g_k, "set size bound");
  gen->add_option("--L", g_L, "number of optimal columns");
  gen->add_option("--epsilon", g_epsilon, "problem-i epsilon (rational)");
  gen->add_option("--n", g_n, "universe size (random-k)");
  gen->add_option("--m", g_m, "number of sets (random-k)");
  gen->add_option("--extra", g_extra, "distractor sets (known-opt)");
  gen->add_option("--seed", g_seed, "generator seed");
  gen->add_option("--weight-lo", g_wlo, "weight range low (random-k)");
  gen->add_option("--weight-hi", g_whi, "weight range high (random-k)");
  gen->add_option("--out", g_out, "output instance file")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "run one algorithm on an instance file");
  SolveArgs s;
  solve->add_option("--algorithm", s.algorithm, "greedy|gaww|opo-ea|semo|lseip|gseip|exact")
      ->required();
  solve->add_option("--instance", s.instance, "instance file")->required();
  auto* seed_opt = solve->add_option("--seed", s.seed, "RNG seed (EAs)");
  solve->add_option("--budget", s.budget, "evaluation budget, integer or expression (EAs)");
  solve->add_flag("--extend", s.extend, "apply the subset closure before solving");
  solve->add_option("--trace", s.trace_path, "write the run trace (and prices) here");
  solve->add_option("--acceptance", s.acceptance, "opo-ea acceptance: literal|penalty");
  solve->add_option("--init", s.init, "opo-ea initialization: empty|random");
  solve->add_option("--mutation", s.mutation, "opo-ea/semo mutation: one-bit|bit-wise");
  solve->add_option("--isolation", s.isolation, "seip isolation: covered|feasibility");
  solve->add_option("--oracle-limit", s.oracle_limit, "max m for the exact oracle");

  // experiment
  auto* exp = app.add_subcommand("experiment", "run a config of (algorithm x seed) cells");
  std::string e_config;
  int e_jobs = scw::default_jobs();
  exp->add_option("--config", e_config, "experiment config JSON")->required();
  exp->add_option("--jobs", e_jobs, "worker threads (default SCW_JOBS or 1)");

  // verify
  auto* ver = app.add_subcommand("verify", "check certificates and price audits");
  std::string v_kind, v_instance, v_cert, v_trace, v_prices, v_optimum, v_opt;
  std::size_t v_oracle_limit = 24;
  ver->add_option("--kind", v_kind, "certificate | trace-cert | audit")->required();
  ver->add_option("--instance", v_instance, "instance file")->required();
  ver->add_option("--certificate", v_cert, "certificate JSON (kind=certificate)");
  ver->add_option("--trace", v_trace, "trace CSV (trace-cert, audit)");
  ver->add_option("--prices", v_prices, "prices CSV (audit; default <trace>.prices)");
  ver->add_option("--optimum", v_optimum, "optimum sidecar (audit; default <instance>.opt)");
  ver->add_option("--opt", v_opt, "optimal value override, rational");
  ver->add_option("--oracle-limit", v_oracle_limit, "max m for the exact oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      if (g_kind == "problem-i" && g_epsilon.empty()) {
        std::cerr << "error: --kind problem-i requires --epsilon\n";
        return kExitUsage;
      }
      if (g_kind != "problem-i" && g_kind != "random-k" && g_kind != "known-opt") {
        std::cerr << "error: unknown generator kind " << g_kind << "\n";
        return kExitUsage;
      }
      return cmd_generate(g_kind, g_k, g_L, g_epsilon, g_n, g_m, g_extra, g_seed, g_wlo, g_whi,
                          g_out);
    }
    if (solve->parsed()) {
      s.seed_set = seed_opt->count() > 0;
      return cmd_solve(s);
    }
    if (exp->parsed()) return cmd_experiment(e_config, e_jobs);
    if (ver->parsed()) {
      return cmd_verify(v_kind, v_instance, v_cert, v_trace, v_prices, v_optimum, v_opt,
                        v_oracle_limit);
    }
  } catch (const scw::OracleRefusal& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOracleRefusal;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed file: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
