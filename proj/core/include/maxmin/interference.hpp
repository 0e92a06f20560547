#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "maxmin/types.hpp"

namespace maxmin {

/// Interference side of a utility u_k(p) = p_k / f_k(p): eval maps a
/// nonnegative power vector to the strictly positive vector
/// (f_1(p), ..., f_K(p)). Implementations must be monotone and strictly
/// scalable in every coordinate (see check_standard_interference) and safe
/// for concurrent use after construction.
class InterferenceModel {
 public:
  virtual ~InterferenceModel() = default;
  virtual Index dim() const = 0;
  virtual Vec eval(const Vec& p) const = 0;
};

/// f(p) = F p + sigma with F >= 0 entrywise. A valid instance needs
/// sigma > 0; zero entries are accepted at construction so the axiom checker
/// can expose the positivity violation. The canonical synthetic instance
/// family; admits closed-form solutions used as oracles.
class AffineModel final : public InterferenceModel {
 public:
  AffineModel(Mat cross_gain, Vec noise);

  Index dim() const override { return sigma_.size(); }
  Vec eval(const Vec& p) const override;

  const Mat& cross_gain() const { return F_; }
  const Vec& noise() const { return sigma_; }

  /// Submodel on the kept users with the dropped users transmitting zero.
  AffineModel restricted(const std::vector<Index>& keep) const;

 private:
  Mat F_;
  Vec sigma_;
};

/// T(p) = (w_1 f_1(p), ..., w_K f_K(p)). Positive rescaling preserves
/// monotonicity and strict scalability.
class ScaledModel final : public InterferenceModel {
 public:
  ScaledModel(std::shared_ptr<const InterferenceModel> inner, Vec weights);

  Index dim() const override { return weights_.size(); }
  Vec eval(const Vec& p) const override;

 private:
  std::shared_ptr<const InterferenceModel> inner_;
  Vec weights_;
};

ScaledModel scale_by_weights(std::shared_ptr<const InterferenceModel> model,
                             Vec weights);

/// View of a model on a coordinate subset: the dropped users transmit zero
/// power. Used for reduced-network analysis of points with idle users.
class RestrictedModel final : public InterferenceModel {
 public:
  RestrictedModel(std::shared_ptr<const InterferenceModel> inner,
                  std::vector<Index> keep);

  Index dim() const override { return static_cast<Index>(keep_.size()); }
  Vec eval(const Vec& p) const override;

 private:
  std::shared_ptr<const InterferenceModel> inner_;
  std::vector<Index> keep_;
};

/// (p_k / f_k(p))_k. Zero power gives zero utility.
Vec eval_utilities(const InterferenceModel& model, const Vec& p);

struct SiCheckOptions {
  int trials = 1000;
  double alpha_min = 1.0;  // exclusive
  double alpha_max = 10.0;
  std::uint64_t rng_seed = 1;
  double power_min = 1e-6;  // watts; log-uniform sampling range
  double power_max = 1e3;
  double rel_margin = 1e-12;  // slack before a strict inequality is flagged
};

/// Samples pairs x >= y >= 0 (with zero coordinates injected) and scalings
/// alpha in (alpha_min, alpha_max], and flags violations of positivity,
/// monotonicity, or strict scalability beyond the relative margin.
CheckReport check_standard_interference(const InterferenceModel& model,
                                        const SiCheckOptions& opts = {});
CheckReport check_standard_interference(const InterferenceModel& model, int trials,
                                        std::pair<double, double> scale_range,
                                        std::uint64_t rng_seed);

}  // namespace maxmin
