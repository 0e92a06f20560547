#pragma once

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>

namespace maxmin {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Malformed input: dimension mismatch, violated precondition, unparsable
/// file. The CLI maps this to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical evaluation could not be completed (e.g. an ill-conditioned
/// moment matrix). Carries a reciprocal condition estimate when available.
class EvalError : public std::runtime_error {
 public:
  explicit EvalError(const std::string& what, double rcond = -1.0)
      : std::runtime_error(what), rcond_(rcond) {}
  double reciprocal_condition() const { return rcond_; }

 private:
  double rcond_;
};

/// A model could not be constructed from the given data.
class ModelBuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message);
void require_dim(const Vec& v, Index expected, const char* name);
void require_nonnegative(const Vec& v, const char* name);
void require_positive(const Vec& v, const char* name);

/// Outcome of a randomized axiom check. A pass is sampled evidence, not a
/// proof; a failure carries the offending sample.
struct CheckReport {
  bool passed = true;
  int trials = 0;
  std::string failure;  // which property failed and with what values
  std::optional<Vec> witness_x;
  std::optional<Vec> witness_y;
  double witness_alpha = 0.0;
};

}  // namespace maxmin
