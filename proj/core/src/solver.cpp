#include "maxmin/solver.hpp"

#include <cmath>

namespace maxmin {

Vec normalized_map(const InterferenceModel& weighted_model,
                   const MonotoneNorm& norm, const Vec& p) {
  require_nonnegative(p, "power vector");
  const Vec t = weighted_model.eval(p);
  return (norm.budget() / norm(t)) * t;
}

MaxMinSolution solve_weighted_maxmin(const InterferenceModel& model,
                                     const Vec& weights, const MonotoneNorm& norm,
                                     const SolverOptions& opts) {
  const Index dim = model.dim();
  require_dim(weights, dim, "weights");
  require_positive(weights, "weights");
  if (norm.dim() >= 0) require(norm.dim() == dim, "norm dimension mismatch");
  require(opts.tol > 0.0, "solver tol must be positive");
  require(opts.max_iter >= 1, "solver max_iter must be >= 1");

  const double budget = norm.budget();
  Vec p;
  if (opts.p_init) {
    require_dim(*opts.p_init, dim, "p_init");
    require_nonnegative(*opts.p_init, "p_init");
    p = *opts.p_init;
  } else {
    const Vec ones = Vec::Ones(dim);
    p = (budget / norm(ones)) * ones;
  }

  MaxMinSolution result;
  for (int n = 1; n <= opts.max_iter; ++n) {
    const Vec t = weights.cwiseProduct(model.eval(p));
    const Vec next = (budget / norm(t)) * t;
    const double residual = (next - p).cwiseAbs().maxCoeff() / budget;
    p = next;
    result.iterations = n;
    if (opts.record_trace) result.trace.emplace_back(n, residual);
    if (residual <= opts.tol) {
      result.converged = true;
      break;
    }
  }

  result.p_star = p;
  result.c_star = budget / norm(weights.cwiseProduct(model.eval(p)));
  result.utilities = eval_utilities(model, p);
  return result;
}

Vec extract_weights(const InterferenceModel& model, const Vec& p_star) {
  require_dim(p_star, model.dim(), "p_star");
  require_nonnegative(p_star, "p_star");
  for (Index k = 0; k < p_star.size(); ++k) {
    if (p_star[k] == 0.0) {
      throw UsageError(
          "extract_weights: p_star has an idle user (coordinate " +
          std::to_string(k) +
          "); analyze the reduced network of active users instead "
          "(see certify_boundary)");
    }
  }
  return eval_utilities(model, p_star);
}

bool feasibility_certificate(const InterferenceModel& model, const Vec& weights,
                             const Vec& p, double c) {
  require_dim(weights, model.dim(), "weights");
  require_positive(weights, "weights");
  require_dim(p, model.dim(), "power vector");
  require_nonnegative(p, "power vector");
  require(c >= 0.0, "level c must be nonnegative");
  if (c == 0.0) return true;
  const Vec t = weights.cwiseProduct(model.eval(p));
  return (p.array() >= c * t.array()).all();
}

}  // namespace maxmin
