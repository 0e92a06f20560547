#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maxmin/cellless.hpp"
#include "maxmin/io.hpp"
#include "maxmin/pareto.hpp"
#include "maxmin/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw maxmin::UsageError("cannot open output file '" + out_path + "'");
  out << text;
}

maxmin::MonotoneNorm make_norm(const std::string& kind, double budget,
                               const std::string& weights_csv) {
  using maxmin::MonotoneNorm;
  const auto k = maxmin::parse_norm_kind(kind);
  switch (k) {
    case maxmin::NormKind::L1:
      return MonotoneNorm::l1(budget);
    case maxmin::NormKind::LInf:
      return MonotoneNorm::linf(budget);
    case maxmin::NormKind::WeightedL1:
    case maxmin::NormKind::WeightedLInf: {
      if (weights_csv.empty()) {
        throw maxmin::UsageError("--norm-weights is required for weighted norms");
      }
      const maxmin::Vec w = maxmin::parse_vector(weights_csv);
      return k == maxmin::NormKind::WeightedL1
                 ? MonotoneNorm::weighted_l1(w, budget)
                 : MonotoneNorm::weighted_linf(w, budget);
    }
  }
  throw maxmin::UsageError("unsupported norm kind");
}

struct SiCheckArgs {
  std::string model_path;
  int trials = 1000;
  std::uint64_t seed = 1;
  double alpha_min = 1.0;
  double alpha_max = 10.0;
  std::string out_path;
};

int run_si_check(const SiCheckArgs& args) {
  const auto model = maxmin::load_affine_model(args.model_path);
  maxmin::SiCheckOptions opts;
  opts.trials = args.trials;
  opts.rng_seed = args.seed;
  opts.alpha_min = args.alpha_min;
  opts.alpha_max = args.alpha_max;
  const auto report = maxmin::check_standard_interference(model, opts);
  emit(maxmin::check_report_to_json(report), args.out_path);
  return report.passed ? kExitOk : kExitDomain;
}

struct SolveArgs {
  std::string model_path;
  std::string weights_csv;
  std::string norm_kind = "linf";
  std::string norm_weights_csv;
  double budget = 0.0;
  double tol = 1e-12;
  int max_iter = 10000;
  std::string p_init_csv;
  std::string out_format = "json";
  std::string out_path;
};

int run_solve(const SolveArgs& args) {
  const auto model = maxmin::load_affine_model(args.model_path);
  const auto norm = make_norm(args.norm_kind, args.budget, args.norm_weights_csv);
  const maxmin::Vec weights = args.weights_csv.empty()
                                  ? maxmin::Vec::Ones(model.dim()).eval()
                                  : maxmin::parse_vector(args.weights_csv);
  maxmin::SolverOptions opts;
  opts.tol = args.tol;
  opts.max_iter = args.max_iter;
  if (!args.p_init_csv.empty()) opts.p_init = maxmin::parse_vector(args.p_init_csv);

  const auto solution = maxmin::solve_weighted_maxmin(model, weights, norm, opts);
  if (args.out_format == "json") {
    emit(maxmin::solution_to_json(solution), args.out_path);
  } else if (args.out_format == "csv") {
    emit(maxmin::solution_to_csv(solution, weights), args.out_path);
  } else {
    throw maxmin::UsageError("--out-format must be json or csv");
  }
  if (!solution.converged) {
    std::cerr << "solve: not converged within " << args.max_iter
              << " iterations (result flagged)\n";
    return kExitDomain;
  }
  return kExitOk;
}

struct BoundarySampleArgs {
  std::string model_path;
  std::string norm_kind = "linf";
  std::string norm_weights_csv;
  double budget = 0.0;
  int n = 1;
  std::uint64_t seed = 1;
  std::string out_format = "csv";
  std::string out_path;
};

int run_boundary_sample(const BoundarySampleArgs& args) {
  const auto model = maxmin::load_affine_model(args.model_path);
  const auto norm = make_norm(args.norm_kind, args.budget, args.norm_weights_csv);
  const auto samples = maxmin::sample_boundary(model, norm, args.n, args.seed);
  if (args.out_format != "csv") {
    throw maxmin::UsageError("--out-format must be csv for boundary sample");
  }
  emit(maxmin::boundary_samples_to_csv(samples), args.out_path);
  return kExitOk;
}

struct BoundaryVerifyArgs {
  std::string model_path;
  std::string norm_kind = "linf";
  std::string norm_weights_csv;
  double budget = 0.0;
  std::string p_csv;
  bool crosscheck = false;
  double tol = 1e-9;
  std::string out_path;
};

int run_boundary_verify(const BoundaryVerifyArgs& args) {
  const auto model = maxmin::load_affine_model(args.model_path);
  const auto norm = make_norm(args.norm_kind, args.budget, args.norm_weights_csv);
  const maxmin::Vec p = maxmin::parse_vector(args.p_csv);
  if (p.size() != model.dim()) {
    throw maxmin::UsageError("--p: expected " + std::to_string(model.dim()) +
                             " entries");
  }
  maxmin::require_nonnegative(p, "--p");
  if (norm(p) > args.budget * (1.0 + args.tol)) {
    std::cerr << "boundary verify: point violates the norm constraint "
              << "(||p|| = " << maxmin::format_double(norm(p)) << " > budget "
              << maxmin::format_double(args.budget) << ")\n";
    return kExitDomain;
  }
  maxmin::CertifyOptions opts;
  opts.tol = args.tol;
  opts.crosscheck = args.crosscheck;
  const auto cert = maxmin::certify_boundary(model, norm, p, opts);
  emit(maxmin::certificate_to_json(cert), args.out_path);
  return kExitOk;
}

struct CellLessArgs {
  std::string config_path;
  std::string policies = "full,random,fractional";
  std::string norm_kind = "linf";
  std::uint64_t policy_seed = 1;
  double fractional_exponent = -1.0;
  std::string out_format = "csv";
  std::string out_path;
};

int run_cellless(const CellLessArgs& args) {
  const auto cfg = maxmin::load_network_config(args.config_path);
  const double budget_watts = maxmin::dbm_to_watts(cfg.p_max_dbm);
  const auto kind = maxmin::parse_norm_kind(args.norm_kind);
  if (kind != maxmin::NormKind::L1 && kind != maxmin::NormKind::LInf) {
    throw maxmin::UsageError("cellless run supports --norm l1 or linf");
  }
  const auto norm = kind == maxmin::NormKind::L1
                        ? maxmin::MonotoneNorm::l1(budget_watts)
                        : maxmin::MonotoneNorm::linf(budget_watts);

  const auto instance = maxmin::build_cellless_instance(cfg);

  std::vector<maxmin::PolicyRunRow> rows;
  std::istringstream policy_list(args.policies);
  std::string name;
  while (std::getline(policy_list, name, ',')) {
    maxmin::PowerPolicy policy;
    policy.kind = maxmin::parse_policy_kind(name);
    policy.seed = args.policy_seed;
    policy.exponent = args.fractional_exponent;
    const maxmin::Vec p = maxmin::apply_policy(policy, instance.network, norm);
    const maxmin::Vec sinr = maxmin::eval_utilities(*instance.model, p);
    const maxmin::Vec rates = maxmin::eval_rates(*instance.model, p);
    for (maxmin::Index k = 0; k < p.size(); ++k) {
      rows.push_back({name, static_cast<int>(k), p[k], sinr[k], rates[k]});
    }
  }
  if (args.out_format != "csv") {
    throw maxmin::UsageError("--out-format must be csv for cellless run");
  }
  emit(maxmin::policy_rows_to_csv(rows), args.out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted max-min power allocation under monotone norm "
               "constraints, weak Pareto boundary analysis, and a cell-less "
               "uplink simulator"};
  app.require_subcommand(1);

  SiCheckArgs si_args;
  auto* si = app.add_subcommand(
      "si-check", "Sampled standard-interference axiom check on a model file");
  si->add_option("--model", si_args.model_path, "affine model file")->required();
  si->add_option("--trials", si_args.trials, "sampled trials");
  si->add_option("--seed", si_args.seed, "RNG seed");
  si->add_option("--alpha-min", si_args.alpha_min, "scaling range lower edge (exclusive)");
  si->add_option("--alpha-max", si_args.alpha_max, "scaling range upper edge");
  si->add_option("--out", si_args.out_path, "output path (default stdout)");

  SolveArgs solve_args;
  auto* solve = app.add_subcommand(
      "solve", "Solve the weighted max-min utility problem");
  solve->add_option("--model", solve_args.model_path, "affine model file")->required();
  solve->add_option("--weights", solve_args.weights_csv,
                    "utility priorities (default all ones)");
  solve->add_option("--norm", solve_args.norm_kind, "l1 | linf | wl1 | wlinf");
  solve->add_option("--norm-weights", solve_args.norm_weights_csv,
                    "coordinate weights for weighted norms");
  solve->add_option("--budget", solve_args.budget, "norm budget (linear units)")
      ->required();
  solve->add_option("--tol", solve_args.tol, "relative sup-norm stopping threshold");
  solve->add_option("--max-iter", solve_args.max_iter, "iteration cap");
  solve->add_option("--p-init", solve_args.p_init_csv, "starting point");
  solve->add_option("--out-format", solve_args.out_format, "json | csv");
  solve->add_option("--out", solve_args.out_path, "output path (default stdout)");

  auto* boundary = app.add_subcommand("boundary", "Weak Pareto boundary tools");
  boundary->require_subcommand(1);

  BoundarySampleArgs sample_args;
  auto* sample = boundary->add_subcommand(
      "sample", "Sample utility tuples on the weak Pareto boundary");
  sample->add_option("--model", sample_args.model_path, "affine model file")->required();
  sample->add_option("--norm", sample_args.norm_kind, "l1 | linf | wl1 | wlinf");
  sample->add_option("--norm-weights", sample_args.norm_weights_csv,
                     "coordinate weights for weighted norms");
  sample->add_option("--budget", sample_args.budget, "norm budget")->required();
  sample->add_option("--n", sample_args.n, "number of samples")->required();
  sample->add_option("--seed", sample_args.seed, "RNG seed");
  sample->add_option("--out-format", sample_args.out_format, "csv");
  sample->add_option("--out", sample_args.out_path, "output path (default stdout)");

  BoundaryVerifyArgs verify_args;
  auto* verify = boundary->add_subcommand(
      "verify", "Certify boundary membership of a power vector");
  verify->add_option("--model", verify_args.model_path, "affine model file")->required();
  verify->add_option("--norm", verify_args.norm_kind, "l1 | linf | wl1 | wlinf");
  verify->add_option("--norm-weights", verify_args.norm_weights_csv,
                     "coordinate weights for weighted norms");
  verify->add_option("--budget", verify_args.budget, "norm budget")->required();
  verify->add_option("--p", verify_args.p_csv, "power vector, comma separated")
      ->required();
  verify->add_flag("--crosscheck", verify_args.crosscheck,
                   "re-solve with extracted weights and report the recovery");
  verify->add_option("--tol", verify_args.tol, "boundary tolerance (relative)");
  verify->add_option("--out", verify_args.out_path, "output path (default stdout)");

  auto* cellless = app.add_subcommand("cellless", "Cell-less uplink experiments");
  cellless->require_subcommand(1);

  CellLessArgs cell_args;
  auto* cell_run = cellless->add_subcommand(
      "run", "Evaluate power policies on a simulated cell-less uplink");
  cell_run->add_option("--config", cell_args.config_path, "network config file")
      ->required();
  cell_run->add_option("--policies", cell_args.policies,
                       "comma list of full, random, fractional");
  cell_run->add_option("--norm", cell_args.norm_kind, "l1 | linf");
  cell_run->add_option("--policy-seed", cell_args.policy_seed, "random policy seed");
  cell_run->add_option("--fractional-exponent", cell_args.fractional_exponent,
                       "exponent of the fractional policy");
  cell_run->add_option("--out-format", cell_args.out_format, "csv");
  cell_run->add_option("--out", cell_args.out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*si) return run_si_check(si_args);
    if (*solve) return run_solve(solve_args);
    if (*sample) return run_boundary_sample(sample_args);
    if (*verify) return run_boundary_verify(verify_args);
    if (*cell_run) return run_cellless(cell_args);
  } catch (const maxmin::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
