#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "maxmin/interference.hpp"
#include "maxmin/norms.hpp"

namespace maxmin {

struct SolverOptions {
  double tol = 1e-12;  // relative sup-norm change between iterates
  int max_iter = 10000;
  std::optional<Vec> p_init;  // default: ones scaled to the budget
  bool record_trace = true;
};

struct MaxMinSolution {
  Vec p_star;
  double c_star = 0.0;
  Vec utilities;
  int iterations = 0;
  std::vector<std::pair<int, double>> trace;  // (iteration, residual)
  bool converged = false;
};

/// One step of the budget-normalized iteration:
/// p |-> (budget / ||T(p)||) T(p). The result has norm equal to the budget
/// up to rounding and is strictly positive.
Vec normalized_map(const InterferenceModel& weighted_model,
                   const MonotoneNorm& norm, const Vec& p);

/// Maximizes min_k u_k(p) / weights_k over {p >= 0 : ||p|| <= budget} by
/// iterating the normalized map to its unique fixed point. The optimum
/// equalizes the weighted utilities, saturates the budget, and is strictly
/// positive. Non-convergence within max_iter is reported through the
/// `converged` flag, not an exception.
MaxMinSolution solve_weighted_maxmin(const InterferenceModel& model,
                                     const Vec& weights, const MonotoneNorm& norm,
                                     const SolverOptions& opts = {});

/// Weights under which p_star is the weighted max-min optimum:
/// w_k = u_k(p_star). Requires p_star strictly positive; points with idle
/// users go through the reduced-network path in pareto.hpp.
Vec extract_weights(const InterferenceModel& model, const Vec& p_star);

/// True iff p >= c * T(p) coordinate-wise, which is equivalent to
/// u_k(p) >= c * weights_k for every k.
bool feasibility_certificate(const InterferenceModel& model, const Vec& weights,
                             const Vec& p, double c);

}  // namespace maxmin
