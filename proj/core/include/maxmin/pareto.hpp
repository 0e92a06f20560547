#pragma once

#include <optional>
#include <vector>

#include "maxmin/solver.hpp"

namespace maxmin {

struct BoundaryCertificate {
  bool on_boundary = false;
  double norm_value = 0.0;
  double budget = 0.0;

  /// Result of re-solving the max-min problem with the weights extracted at
  /// p. On the boundary the solve recovers p itself with level 1. Points
  /// with idle users are checked on the reduced network of active users;
  /// recovered_p keeps zeros at the dropped coordinates.
  struct Crosscheck {
    double c_star = 0.0;
    Vec recovered_p;
    std::vector<Index> active_users;
  };
  std::optional<Crosscheck> solver_crosscheck;

  /// Strictly dominating feasible point; present only off the boundary.
  std::optional<Vec> dominator;
};

struct BoundarySample {
  Vec p;  // ||p|| equals the budget up to rounding
  Vec u;
};

enum class Dominance { FirstStrictlyDominates, SecondStrictlyDominates, Neither };

struct CertifyOptions {
  double tol = 1e-9;  // | ||p|| - budget | <= tol * budget counts as equal
  bool crosscheck = false;
};

/// Decides weak Pareto boundary membership of the utilities at p by the norm
/// saturation test. Requires p feasible. Off the boundary a verified strict
/// dominator is attached.
BoundaryCertificate certify_boundary(const InterferenceModel& model,
                                     const MonotoneNorm& norm, const Vec& p,
                                     const CertifyOptions& opts = {});

/// A strictly positive feasible point whose utilities strictly dominate those
/// of p, built by scaling p to the budget sphere and nudging idle users to a
/// small positive power. Returns nullopt when ||p|| already equals the budget
/// or when verification fails at the given perturbation (callers may shrink
/// it).
std::optional<Vec> find_dominating_point(const InterferenceModel& model,
                                         const MonotoneNorm& norm, const Vec& p,
                                         double perturbation);

/// Same, trying perturbations 1e-2, 1e-3, ..., 1e-8 in order.
std::optional<Vec> find_dominating_point(const InterferenceModel& model,
                                         const MonotoneNorm& norm, const Vec& p);

/// n points on the budget sphere with their utilities: the uniform direction
/// first, then the K axis points, then seeded log-uniform directions. Every
/// returned point lies on the weak Pareto boundary.
std::vector<BoundarySample> sample_boundary(const InterferenceModel& model,
                                            const MonotoneNorm& norm, int n,
                                            std::uint64_t rng_seed);

/// Strict coordinate-wise comparison in both directions.
Dominance dominance_compare(const Vec& u1, const Vec& u2);

}  // namespace maxmin
