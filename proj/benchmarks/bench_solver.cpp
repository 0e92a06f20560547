#include <benchmark/benchmark.h>

#include "maxmin/pareto.hpp"
#include "maxmin/rng.hpp"
#include "maxmin/solver.hpp"

namespace {

using namespace maxmin;

AffineModel random_instance(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  Mat f(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    for (Index c = 0; c < dim; ++c) {
      f(r, c) = r == c ? 0.0 : rng.uniform(0.0, 0.5 / static_cast<double>(dim));
    }
  }
  Vec sigma(dim);
  for (Index k = 0; k < dim; ++k) sigma[k] = rng.log_uniform(0.1, 10.0);
  return AffineModel(std::move(f), std::move(sigma));
}

void BM_SolveWeightedMaxMin(benchmark::State& state) {
  const Index dim = state.range(0);
  const auto model = random_instance(dim, 1);
  const auto norm = MonotoneNorm::linf(10.0);
  const Vec weights = Vec::Ones(dim);
  for (auto _ : state) {
    auto solution = solve_weighted_maxmin(model, weights, norm);
    benchmark::DoNotOptimize(solution.c_star);
  }
}
BENCHMARK(BM_SolveWeightedMaxMin)->Arg(2)->Arg(8)->Arg(32)->Arg(128);

void BM_NormalizedMapStep(benchmark::State& state) {
  const Index dim = state.range(0);
  const auto model = std::make_shared<AffineModel>(random_instance(dim, 2));
  const auto weighted = scale_by_weights(model, Vec::Ones(dim));
  const auto norm = MonotoneNorm::linf(10.0);
  Vec p = Vec::Constant(dim, 1.0);
  for (auto _ : state) {
    p = normalized_map(weighted, norm, p);
    benchmark::DoNotOptimize(p.data());
  }
}
BENCHMARK(BM_NormalizedMapStep)->Arg(8)->Arg(128);

void BM_BoundarySampling(benchmark::State& state) {
  const auto model = random_instance(8, 3);
  const auto norm = MonotoneNorm::linf(10.0);
  for (auto _ : state) {
    auto samples = sample_boundary(model, norm, 100, 7);
    benchmark::DoNotOptimize(samples.data());
  }
}
BENCHMARK(BM_BoundarySampling);

void BM_CertifyWithCrosscheck(benchmark::State& state) {
  const auto model = random_instance(8, 4);
  const auto norm = MonotoneNorm::linf(10.0);
  const Vec p = Vec::Constant(8, 10.0);
  CertifyOptions opts;
  opts.crosscheck = true;
  for (auto _ : state) {
    auto cert = certify_boundary(model, norm, p, opts);
    benchmark::DoNotOptimize(cert.on_boundary);
  }
}
BENCHMARK(BM_CertifyWithCrosscheck);

}  // namespace

BENCHMARK_MAIN();
