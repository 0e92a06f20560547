#include <benchmark/benchmark.h>

#include "maxmin/cellless.hpp"
#include "maxmin/rng.hpp"
#include "maxmin/solver.hpp"

namespace {

using namespace maxmin;

NetworkConfig bench_config(int users, int aps, int draws) {
  NetworkConfig cfg;
  cfg.num_users = users;
  cfg.num_aps = aps;
  cfg.antennas_per_ap = 2;
  cfg.cluster_size = 3;
  cfg.mc_draws = draws;
  cfg.rng_seed = 42;
  return cfg;
}

const CellLessInstance& shared_instance() {
  static const CellLessInstance instance =
      build_cellless_instance(bench_config(8, 9, 2000));
  return instance;
}

void BM_EstimateMoments(benchmark::State& state) {
  const auto cfg = bench_config(8, 9, static_cast<int>(state.range(0)));
  const auto network = generate_network(cfg);
  for (auto _ : state) {
    auto moments = estimate_moments(network, cfg);
    benchmark::DoNotOptimize(moments.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateMoments)->Arg(500)->Arg(2000)->Arg(8000)
    ->Unit(benchmark::kMillisecond);

void BM_CellLessEval(benchmark::State& state) {
  const auto& instance = shared_instance();
  Rng rng(5);
  Vec p(instance.model->dim());
  for (Index k = 0; k < p.size(); ++k) p[k] = rng.log_uniform(1e-4, 1.0);
  for (auto _ : state) {
    Vec f = instance.model->eval(p);
    benchmark::DoNotOptimize(f.data());
  }
}
BENCHMARK(BM_CellLessEval);

void BM_CellLessMaxMinSolve(benchmark::State& state) {
  const auto& instance = shared_instance();
  const auto norm = MonotoneNorm::linf(0.1);
  const Vec weights = Vec::Ones(instance.model->dim());
  SolverOptions opts;
  opts.tol = 1e-10;
  for (auto _ : state) {
    auto solution = solve_weighted_maxmin(*instance.model, weights, norm, opts);
    benchmark::DoNotOptimize(solution.c_star);
  }
  state.SetLabel("desk-scale network");
}
BENCHMARK(BM_CellLessMaxMinSolve)->Unit(benchmark::kMillisecond);

void BM_ApplyFractionalPolicy(benchmark::State& state) {
  const auto& instance = shared_instance();
  const auto norm = MonotoneNorm::linf(0.1);
  PowerPolicy policy;
  policy.kind = PolicyKind::Fractional;
  for (auto _ : state) {
    Vec p = apply_policy(policy, instance.network, norm);
    benchmark::DoNotOptimize(p.data());
  }
}
BENCHMARK(BM_ApplyFractionalPolicy);

}  // namespace
