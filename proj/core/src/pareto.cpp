#include "maxmin/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "maxmin/rng.hpp"

namespace maxmin {

namespace {

// Points this close to the budget sphere count as boundary points, both for
// certification and for the dominator search, so the two always agree.
constexpr double kBoundaryTol = 1e-9;

bool strictly_dominates(const Vec& a, const Vec& b) {
  return (a.array() > b.array()).all();
}

// Non-owning shared_ptr for building scoped wrapper models.
std::shared_ptr<const InterferenceModel> borrow(const InterferenceModel& model) {
  return {&model, [](const InterferenceModel*) {}};
}

}  // namespace

Dominance dominance_compare(const Vec& u1, const Vec& u2) {
  require(u1.size() == u2.size(), "dominance_compare: length mismatch");
  if (strictly_dominates(u1, u2)) return Dominance::FirstStrictlyDominates;
  if (strictly_dominates(u2, u1)) return Dominance::SecondStrictlyDominates;
  return Dominance::Neither;
}

std::optional<Vec> find_dominating_point(const InterferenceModel& model,
                                         const MonotoneNorm& norm, const Vec& p,
                                         double perturbation) {
  require_dim(p, model.dim(), "power vector");
  require_nonnegative(p, "power vector");
  require(perturbation > 0.0, "perturbation must be positive");

  const double budget = norm.budget();
  const double value = norm(p);
  if (value >= budget * (1.0 - kBoundaryTol)) return std::nullopt;

  // Scale onto the budget sphere (any interior direction when p = 0), give
  // idle users a small positive power, and renormalize.
  Vec candidate = value == 0.0 ? Vec::Ones(p.size()) : p;
  candidate *= budget / norm(candidate);
  for (Index k = 0; k < candidate.size(); ++k) {
    if (candidate[k] == 0.0) candidate[k] = perturbation * budget;
  }
  candidate *= budget / norm(candidate);

  const Vec before = eval_utilities(model, p);
  const Vec after = eval_utilities(model, candidate);
  if (strictly_dominates(after, before)) return candidate;
  return std::nullopt;
}

std::optional<Vec> find_dominating_point(const InterferenceModel& model,
                                         const MonotoneNorm& norm, const Vec& p) {
  for (double eps = 1e-2; eps >= 1e-8 * 0.5; eps *= 1e-1) {
    if (auto candidate = find_dominating_point(model, norm, p, eps)) {
      return candidate;
    }
  }
  return std::nullopt;
}

BoundaryCertificate certify_boundary(const InterferenceModel& model,
                                     const MonotoneNorm& norm, const Vec& p,
                                     const CertifyOptions& opts) {
  require_dim(p, model.dim(), "power vector");
  require_nonnegative(p, "power vector");
  require(opts.tol > 0.0, "certify tol must be positive");

  const double budget = norm.budget();
  const double value = norm(p);
  require(value <= budget * (1.0 + opts.tol),
          "certify_boundary: point violates the norm constraint");

  BoundaryCertificate cert;
  cert.norm_value = value;
  cert.budget = budget;
  cert.on_boundary = std::abs(value - budget) <= std::max(opts.tol, kBoundaryTol) * budget;

  if (!cert.on_boundary) {
    cert.dominator = find_dominating_point(model, norm, p);
    return cert;
  }

  if (!opts.crosscheck) return cert;

  std::vector<Index> active;
  for (Index k = 0; k < p.size(); ++k) {
    if (p[k] > 0.0) active.push_back(k);
  }

  BoundaryCertificate::Crosscheck cc;
  cc.active_users = active;
  if (active.size() == static_cast<std::size_t>(p.size())) {
    const Vec weights = extract_weights(model, p);
    const MaxMinSolution sol = solve_weighted_maxmin(model, weights, norm);
    cc.c_star = sol.c_star;
    cc.recovered_p = sol.p_star;
  } else {
    // Idle users carry no information about fairness; check the reduced
    // network of active users and embed the result back with zeros.
    const RestrictedModel reduced(borrow(model), active);
    const MonotoneNorm reduced_norm = norm.restricted(active);
    Vec p_reduced(static_cast<Index>(active.size()));
    for (std::size_t i = 0; i < active.size(); ++i) {
      p_reduced[static_cast<Index>(i)] = p[active[i]];
    }
    const Vec weights = extract_weights(reduced, p_reduced);
    const MaxMinSolution sol = solve_weighted_maxmin(reduced, weights, reduced_norm);
    cc.c_star = sol.c_star;
    cc.recovered_p = Vec::Zero(p.size());
    for (std::size_t i = 0; i < active.size(); ++i) {
      cc.recovered_p[active[i]] = sol.p_star[static_cast<Index>(i)];
    }
  }
  cert.solver_crosscheck = std::move(cc);
  return cert;
}

std::vector<BoundarySample> sample_boundary(const InterferenceModel& model,
                                            const MonotoneNorm& norm, int n,
                                            std::uint64_t rng_seed) {
  require(n >= 1, "sample_boundary: n must be >= 1");
  const Index dim = model.dim();
  const double budget = norm.budget();
  Rng rng(rng_seed);

  std::vector<BoundarySample> samples;
  samples.reserve(static_cast<std::size_t>(n));

  auto push_direction = [&](const Vec& direction) {
    BoundarySample s;
    s.p = (budget / norm(direction)) * direction;
    s.u = eval_utilities(model, s.p);
    samples.push_back(std::move(s));
  };

  // Deterministic prefix: the uniform point and the K axis points.
  push_direction(Vec::Ones(dim));
  for (Index k = 0; k < dim && static_cast<int>(samples.size()) < n; ++k) {
    push_direction(Vec::Unit(dim, k));
  }
  while (static_cast<int>(samples.size()) < n) {
    Vec direction(dim);
    for (Index k = 0; k < dim; ++k) direction[k] = rng.log_uniform(1e-6, 1.0);
    push_direction(direction);
  }
  samples.resize(static_cast<std::size_t>(n));
  return samples;
}

}  // namespace maxmin
