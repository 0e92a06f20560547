#include "maxmin/norms.hpp"

#include <algorithm>
#include <cmath>

#include "maxmin/rng.hpp"

namespace maxmin {

MonotoneNorm::MonotoneNorm(NormKind kind, Vec weights, double budget)
    : kind_(kind), weights_(std::move(weights)), budget_(budget) {
  require(budget_ > 0.0, "norm budget must be strictly positive");
  if (weights_.size() > 0) require_positive(weights_, "norm weights");
}

MonotoneNorm MonotoneNorm::l1(double budget) {
  return MonotoneNorm(NormKind::L1, Vec(), budget);
}

MonotoneNorm MonotoneNorm::linf(double budget) {
  return MonotoneNorm(NormKind::LInf, Vec(), budget);
}

MonotoneNorm MonotoneNorm::weighted_l1(Vec weights, double budget) {
  require(weights.size() > 0, "weighted norm needs a nonempty weight vector");
  return MonotoneNorm(NormKind::WeightedL1, std::move(weights), budget);
}

MonotoneNorm MonotoneNorm::weighted_linf(Vec weights, double budget) {
  require(weights.size() > 0, "weighted norm needs a nonempty weight vector");
  return MonotoneNorm(NormKind::WeightedLInf, std::move(weights), budget);
}

double MonotoneNorm::operator()(const Vec& x) const {
  if (dim() >= 0) require_dim(x, dim(), "norm argument");
  require(x.size() > 0, "norm argument must be nonempty");
  switch (kind_) {
    case NormKind::L1:
      return x.cwiseAbs().sum();
    case NormKind::LInf:
      return x.cwiseAbs().maxCoeff();
    case NormKind::WeightedL1:
      return weights_.cwiseProduct(x.cwiseAbs()).sum();
    case NormKind::WeightedLInf:
      return weights_.cwiseProduct(x.cwiseAbs()).maxCoeff();
  }
  return 0.0;  // unreachable
}

MonotoneNorm MonotoneNorm::restricted(const std::vector<Index>& keep) const {
  require(!keep.empty(), "restriction needs at least one coordinate");
  if (weights_.size() == 0) return MonotoneNorm(kind_, Vec(), budget_);
  Vec w(static_cast<Index>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    require(keep[i] >= 0 && keep[i] < weights_.size(),
            "restriction index out of range");
    w[static_cast<Index>(i)] = weights_[keep[i]];
  }
  return MonotoneNorm(kind_, std::move(w), budget_);
}

double norm_eval(const MonotoneNorm& norm, const Vec& x) { return norm(x); }

NormKind parse_norm_kind(const std::string& name) {
  if (name == "l1") return NormKind::L1;
  if (name == "linf") return NormKind::LInf;
  if (name == "wl1") return NormKind::WeightedL1;
  if (name == "wlinf") return NormKind::WeightedLInf;
  throw UsageError("unknown norm kind '" + name + "' (expected l1, linf, wl1, wlinf)");
}

std::string norm_kind_name(NormKind kind) {
  switch (kind) {
    case NormKind::L1: return "l1";
    case NormKind::LInf: return "linf";
    case NormKind::WeightedL1: return "wl1";
    case NormKind::WeightedLInf: return "wlinf";
  }
  return "?";
}

namespace {

std::string vec_to_string(const Vec& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

CheckReport fail_report(std::string what, Vec x, std::optional<Vec> y, int trials) {
  CheckReport report;
  report.passed = false;
  report.trials = trials;
  report.failure = std::move(what);
  report.witness_x = std::move(x);
  report.witness_y = std::move(y);
  return report;
}

}  // namespace

CheckReport check_monotone_norm(const std::function<double(const Vec&)>& candidate,
                                Index dim, int trials, std::uint64_t rng_seed) {
  require(dim >= 1, "check_monotone_norm: dimension must be >= 1");
  require(trials >= 1, "check_monotone_norm: trials must be >= 1");
  Rng rng(rng_seed);
  constexpr double kTol = 1e-9;

  // Deterministic probes catch degenerate functionals (value zero on the
  // diagonal, on an axis, or at the origin) that random draws rarely hit.
  std::vector<Vec> probes;
  probes.push_back(Vec::Zero(dim));
  probes.push_back(Vec::Ones(dim));
  for (Index k = 0; k < dim; ++k) probes.push_back(Vec::Unit(dim, k));

  const double zero_value = candidate(probes[0]);
  if (std::abs(zero_value) > kTol) {
    return fail_report("definiteness: ||0|| = " + std::to_string(zero_value),
                       probes[0], std::nullopt, 0);
  }
  for (std::size_t i = 1; i < probes.size(); ++i) {
    const double v = candidate(probes[i]);
    if (!(v > 0.0)) {
      return fail_report(
          "definiteness: nonzero vector " + vec_to_string(probes[i]) +
              " has value " + std::to_string(v),
          probes[i], std::nullopt, 0);
    }
  }

  auto draw = [&](bool nonneg) {
    Vec x(dim);
    for (Index k = 0; k < dim; ++k) {
      double mag = rng.log_uniform(1e-6, 1e3);
      if (rng.uniform() < 0.1) mag = 0.0;
      x[k] = (!nonneg && rng.uniform() < 0.5) ? -mag : mag;
    }
    return x;
  };

  for (int t = 0; t < trials; ++t) {
    const Vec x = draw(false);
    const Vec y = draw(false);
    const double nx = candidate(x);
    const double ny = candidate(y);

    if (nx > 0.0 || x.cwiseAbs().maxCoeff() == 0.0) {
      // homogeneity
      const double alpha = rng.uniform(-10.0, 10.0);
      const double lhs = candidate(alpha * x);
      const double rhs = std::abs(alpha) * nx;
      if (std::abs(lhs - rhs) > kTol * (1.0 + std::abs(rhs))) {
        return fail_report("homogeneity: ||a x|| = " + std::to_string(lhs) +
                               " vs |a| ||x|| = " + std::to_string(rhs) +
                               " at a = " + std::to_string(alpha),
                           x, std::nullopt, t + 1);
      }
    } else {
      return fail_report("definiteness: nonzero vector has nonpositive value " +
                             std::to_string(nx),
                         x, std::nullopt, t + 1);
    }

    // triangle inequality
    const double both = candidate(x + y);
    if (both > nx + ny + kTol * (1.0 + nx + ny)) {
      return fail_report("triangle inequality: ||x + y|| = " + std::to_string(both) +
                             " > ||x|| + ||y|| = " + std::to_string(nx + ny),
                         x, y, t + 1);
    }

    // monotonicity on the nonnegative orthant: 0 <= lo <= hi
    Vec lo = draw(true).cwiseAbs();
    Vec hi = lo;
    for (Index k = 0; k < dim; ++k) {
      if (rng.uniform() < 0.5) hi[k] += rng.log_uniform(1e-6, 1e3);
    }
    const double nlo = candidate(lo);
    const double nhi = candidate(hi);
    if (nlo > nhi + kTol * (1.0 + std::abs(nhi))) {
      return fail_report("monotonicity: 0 <= x <= y but ||x|| = " +
                             std::to_string(nlo) + " > ||y|| = " + std::to_string(nhi),
                         lo, hi, t + 1);
    }
  }

  CheckReport report;
  report.passed = true;
  report.trials = trials;
  return report;
}

CheckReport check_monotone_norm(const MonotoneNorm& norm, Index dim, int trials,
                                std::uint64_t rng_seed) {
  if (norm.dim() >= 0) dim = norm.dim();
  return check_monotone_norm([&norm](const Vec& x) { return norm(x); }, dim,
                             trials, rng_seed);
}

}  // namespace maxmin
