#include "maxmin/interference.hpp"

#include <cmath>
#include <string>

#include "maxmin/rng.hpp"

namespace maxmin {

AffineModel::AffineModel(Mat cross_gain, Vec noise)
    : F_(std::move(cross_gain)), sigma_(std::move(noise)) {
  require(F_.rows() == F_.cols(), "affine model: cross-gain matrix must be square");
  require(F_.rows() == sigma_.size(),
          "affine model: noise dimension must match the cross-gain matrix");
  require((F_.array() >= 0.0).all(), "affine model: cross gains must be nonnegative");
  // Zero noise entries are representable so the axiom checker can flag the
  // resulting positivity violation; a valid instance has sigma > 0.
  require_nonnegative(sigma_, "affine model noise");
}

Vec AffineModel::eval(const Vec& p) const {
  require_dim(p, dim(), "power vector");
  return F_ * p + sigma_;
}

AffineModel AffineModel::restricted(const std::vector<Index>& keep) const {
  const Index m = static_cast<Index>(keep.size());
  require(m >= 1, "restriction needs at least one user");
  Mat f(m, m);
  Vec s(m);
  for (Index i = 0; i < m; ++i) {
    require(keep[i] >= 0 && keep[i] < dim(), "restriction index out of range");
    s[i] = sigma_[keep[i]];
    for (Index j = 0; j < m; ++j) f(i, j) = F_(keep[i], keep[j]);
  }
  return AffineModel(std::move(f), std::move(s));
}

ScaledModel::ScaledModel(std::shared_ptr<const InterferenceModel> inner, Vec weights)
    : inner_(std::move(inner)), weights_(std::move(weights)) {
  require(inner_ != nullptr, "scaled model: inner model is null");
  require_dim(weights_, inner_->dim(), "weights");
  require_positive(weights_, "weights");
}

Vec ScaledModel::eval(const Vec& p) const {
  return weights_.cwiseProduct(inner_->eval(p));
}

ScaledModel scale_by_weights(std::shared_ptr<const InterferenceModel> model,
                             Vec weights) {
  return ScaledModel(std::move(model), std::move(weights));
}

RestrictedModel::RestrictedModel(std::shared_ptr<const InterferenceModel> inner,
                                 std::vector<Index> keep)
    : inner_(std::move(inner)), keep_(std::move(keep)) {
  require(inner_ != nullptr, "restricted model: inner model is null");
  require(!keep_.empty(), "restricted model: empty coordinate set");
  for (Index k : keep_) {
    require(k >= 0 && k < inner_->dim(), "restriction index out of range");
  }
}

Vec RestrictedModel::eval(const Vec& p) const {
  require_dim(p, dim(), "power vector");
  Vec full = Vec::Zero(inner_->dim());
  for (std::size_t i = 0; i < keep_.size(); ++i) full[keep_[i]] = p[static_cast<Index>(i)];
  const Vec f = inner_->eval(full);
  Vec out(dim());
  for (std::size_t i = 0; i < keep_.size(); ++i) out[static_cast<Index>(i)] = f[keep_[i]];
  return out;
}

Vec eval_utilities(const InterferenceModel& model, const Vec& p) {
  require_dim(p, model.dim(), "power vector");
  require_nonnegative(p, "power vector");
  const Vec f = model.eval(p);
  Vec u(p.size());
  for (Index k = 0; k < p.size(); ++k) u[k] = p[k] == 0.0 ? 0.0 : p[k] / f[k];
  return u;
}

namespace {

std::string coord_failure(const char* what, Index k, double lhs, double rhs) {
  return std::string(what) + " violated at coordinate " + std::to_string(k) +
         ": " + std::to_string(lhs) + " vs " + std::to_string(rhs);
}

}  // namespace

CheckReport check_standard_interference(const InterferenceModel& model,
                                        const SiCheckOptions& opts) {
  require(opts.trials >= 1, "check_standard_interference: trials must be >= 1");
  require(opts.alpha_min >= 1.0 && opts.alpha_max > opts.alpha_min,
          "check_standard_interference: scale range must lie in (1, inf)");
  const Index dim = model.dim();
  Rng rng(opts.rng_seed);

  CheckReport report;

  auto check_positivity = [&](const Vec& x, int trial) {
    const Vec f = model.eval(x);
    for (Index k = 0; k < dim; ++k) {
      if (!(f[k] > 0.0)) {
        report.passed = false;
        report.trials = trial;
        report.failure = coord_failure("positivity", k, f[k], 0.0);
        report.witness_x = x;
        return false;
      }
    }
    return true;
  };

  // The all-zero vector is the hardest point for positivity; probe it first.
  if (!check_positivity(Vec::Zero(dim), 0)) return report;

  auto sample = [&](Vec& lower, Vec& upper) {
    lower.resize(dim);
    upper.resize(dim);
    for (Index k = 0; k < dim; ++k) {
      double base = rng.log_uniform(opts.power_min, opts.power_max);
      if (rng.uniform() < 0.1) base = 0.0;  // exercise idle users
      double bump = rng.uniform() < 0.5 ? rng.log_uniform(opts.power_min, opts.power_max) : 0.0;
      lower[k] = base;
      upper[k] = base + bump;
    }
  };

  Vec y, x;
  for (int t = 0; t < opts.trials; ++t) {
    sample(y, x);
    if (!check_positivity(x, t + 1) || !check_positivity(y, t + 1)) return report;

    const Vec fx = model.eval(x);
    const Vec fy = model.eval(y);
    for (Index k = 0; k < dim; ++k) {
      if (fx[k] < fy[k] * (1.0 - opts.rel_margin)) {
        report.passed = false;
        report.trials = t + 1;
        report.failure = coord_failure("monotonicity", k, fx[k], fy[k]);
        report.witness_x = x;
        report.witness_y = y;
        return report;
      }
    }

    // strict scalability: alpha f(x) > f(alpha x) for alpha > 1
    const double alpha =
        std::nextafter(opts.alpha_min, opts.alpha_max) +
        (opts.alpha_max - opts.alpha_min) * rng.uniform();
    const Vec scaled = model.eval(alpha * x);
    for (Index k = 0; k < dim; ++k) {
      const double lhs = alpha * fx[k];
      if (scaled[k] > lhs * (1.0 + opts.rel_margin)) {
        report.passed = false;
        report.trials = t + 1;
        report.failure = coord_failure("scalability", k, scaled[k], lhs) +
                         " at alpha = " + std::to_string(alpha);
        report.witness_x = x;
        report.witness_alpha = alpha;
        return report;
      }
    }
  }

  report.passed = true;
  report.trials = opts.trials;
  return report;
}

CheckReport check_standard_interference(const InterferenceModel& model, int trials,
                                        std::pair<double, double> scale_range,
                                        std::uint64_t rng_seed) {
  SiCheckOptions opts;
  opts.trials = trials;
  opts.alpha_min = scale_range.first;
  opts.alpha_max = scale_range.second;
  opts.rng_seed = rng_seed;
  return check_standard_interference(model, opts);
}

}  // namespace maxmin
