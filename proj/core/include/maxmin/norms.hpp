#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "maxmin/types.hpp"

namespace maxmin {

enum class NormKind { L1, LInf, WeightedL1, WeightedLInf };

/// A monotone norm on R^K paired with the budget of the constraint set
/// {p >= 0 : ||p|| <= budget}. All four kinds depend on coordinates only
/// through their absolute values, so monotonicity on the nonnegative orthant
/// holds by construction.
class MonotoneNorm {
 public:
  static MonotoneNorm l1(double budget);
  static MonotoneNorm linf(double budget);
  static MonotoneNorm weighted_l1(Vec weights, double budget);
  static MonotoneNorm weighted_linf(Vec weights, double budget);

  double operator()(const Vec& x) const;

  double budget() const { return budget_; }
  NormKind kind() const { return kind_; }
  /// Coordinate weights; empty for the unweighted kinds.
  const Vec& weights() const { return weights_; }
  /// Dimension pinned by the weight vector, or -1 when any dimension works.
  Index dim() const { return weights_.size() > 0 ? weights_.size() : -1; }

  /// The same norm on the subspace spanned by the kept coordinates, with the
  /// same budget. Coordinates must be valid and strictly increasing.
  MonotoneNorm restricted(const std::vector<Index>& keep) const;

 private:
  MonotoneNorm(NormKind kind, Vec weights, double budget);

  NormKind kind_;
  Vec weights_;
  double budget_;
};

double norm_eval(const MonotoneNorm& norm, const Vec& x);

NormKind parse_norm_kind(const std::string& name);
std::string norm_kind_name(NormKind kind);

/// Sampled verification of the norm axioms (homogeneity, triangle inequality,
/// definiteness) plus monotonicity on the nonnegative orthant. `candidate` is
/// any functional on R^dim; deterministic probes (zero, ones, axes) are run
/// before the random trials.
CheckReport check_monotone_norm(const std::function<double(const Vec&)>& candidate,
                                Index dim, int trials, std::uint64_t rng_seed);
CheckReport check_monotone_norm(const MonotoneNorm& norm, Index dim, int trials,
                                std::uint64_t rng_seed);

}  // namespace maxmin
