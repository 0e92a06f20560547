#include <doctest.h>

#include <memory>

#include "maxmin/interference.hpp"
#include "maxmin/rng.hpp"
#include "test_support.hpp"

using namespace maxmin;
using testsup::canonical_two_user;

namespace {

Vec make_vec(std::initializer_list<double> values) {
  Vec v(static_cast<Index>(values.size()));
  Index i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

// f_1(p) = p_1^2 + 1 breaks strict scalability; the second coordinate is a
// well-behaved affine function.
class ScalabilityViolator final : public InterferenceModel {
 public:
  Index dim() const override { return 2; }
  Vec eval(const Vec& p) const override {
    Vec f(2);
    f[0] = p[0] * p[0] + 1.0;
    f[1] = p[0] + 1.0;
    return f;
  }
};

// f_1 decreases in p_2, violating monotonicity while staying positive.
class MonotonicityViolator final : public InterferenceModel {
 public:
  Index dim() const override { return 2; }
  Vec eval(const Vec& p) const override {
    Vec f(2);
    f[0] = 2.0 - p[1] / (1.0 + p[1]);
    f[1] = 1.0 + p[0];
    return f;
  }
};

}  // namespace

TEST_CASE("affine model construction validates its inputs") {
  CHECK_THROWS_AS(AffineModel(Mat::Zero(2, 3), Vec::Ones(2)), UsageError);
  CHECK_THROWS_AS(AffineModel(Mat::Zero(2, 2), Vec::Ones(3)), UsageError);
  Mat negative = Mat::Zero(2, 2);
  negative(0, 1) = -0.5;
  CHECK_THROWS_AS(AffineModel(negative, Vec::Ones(2)), UsageError);
  Vec bad_sigma(2);
  bad_sigma << 1.0, -1.0;
  CHECK_THROWS_AS(AffineModel(Mat::Zero(2, 2), bad_sigma), UsageError);
}

TEST_CASE("utilities follow p_k / f_k(p)") {
  const auto model = canonical_two_user();

  const Vec u = eval_utilities(model, make_vec({10.0, 10.0}));
  CHECK(u[0] == doctest::Approx(5.0));
  CHECK(u[1] == doctest::Approx(10.0 / 3.0));

  CHECK(eval_utilities(model, Vec::Zero(2)).isZero(0.0));

  const Vec u_single = eval_utilities(model, make_vec({10.0, 0.0}));
  CHECK(u_single[0] == doctest::Approx(10.0));
  CHECK(u_single[1] == 0.0);

  CHECK_THROWS_AS(eval_utilities(model, Vec::Zero(3)), UsageError);
  CHECK_THROWS_AS(eval_utilities(model, make_vec({-1.0, 0.0})), UsageError);
}

TEST_CASE("weight scaling composes with the base model") {
  const auto model = std::make_shared<AffineModel>(canonical_two_user());

  const auto identity = scale_by_weights(model, Vec::Ones(2));
  const Vec p = make_vec({3.0, 7.0});
  CHECK(identity.eval(p).isApprox(model->eval(p)));

  const auto scaled = scale_by_weights(model, make_vec({2.0, 1.0}));
  CHECK(scaled.eval(Vec::Zero(2)).isApprox(make_vec({2.0, 1.0})));
  CHECK(scaled.eval(make_vec({10.0, 10.0})).isApprox(make_vec({4.0, 3.0})));

  CHECK_THROWS_AS(scale_by_weights(model, make_vec({1.0, 0.0})), UsageError);
  CHECK_THROWS_AS(scale_by_weights(model, make_vec({1.0, -2.0})), UsageError);
  CHECK_THROWS_AS(scale_by_weights(nullptr, Vec::Ones(2)), UsageError);

  // scaling preserves the interference axioms
  const auto report = check_standard_interference(
      scaled, 500, {1.0, 10.0}, 21);
  CHECK(report.passed);
}

TEST_CASE("restricted model equals the restricted matrix form") {
  Rng rng(99);
  Mat f(3, 3);
  f << 0.0, 0.1, 0.2, 0.05, 0.0, 0.1, 0.3, 0.2, 0.0;
  Vec sigma = make_vec({1.0, 2.0, 0.5});
  const auto model = std::make_shared<AffineModel>(f, sigma);

  const std::vector<Index> keep = {0, 2};
  const RestrictedModel generic(model, keep);
  const AffineModel direct = model->restricted(keep);
  for (int t = 0; t < 50; ++t) {
    Vec q(2);
    q << rng.log_uniform(1e-3, 100.0), rng.log_uniform(1e-3, 100.0);
    CHECK(generic.eval(q).isApprox(direct.eval(q), 1e-14));
  }
  CHECK_THROWS_AS(RestrictedModel(model, {}), UsageError);
  CHECK_THROWS_AS(RestrictedModel(model, {3}), UsageError);
}

TEST_CASE("interference axiom checker accepts valid affine instances") {
  const auto report = check_standard_interference(canonical_two_user(), 1000,
                                                  {1.0, 10.0}, 4);
  CHECK(report.passed);
  CHECK(report.trials == 1000);

  Rng rng(500);
  for (int i = 0; i < 5; ++i) {
    const auto model = testsup::random_affine(rng, 2 + (i % 4));
    CHECK(check_standard_interference(model, 400, {1.0, 10.0}, 77 + i).passed);
  }
}

TEST_CASE("interference axiom checker flags zero noise") {
  const AffineModel degenerate(canonical_two_user().cross_gain(), Vec::Zero(2));
  const auto report = check_standard_interference(degenerate, 100, {1.0, 10.0}, 8);
  CHECK_FALSE(report.passed);
  CHECK(report.failure.find("positivity") != std::string::npos);
  REQUIRE(report.witness_x.has_value());
  CHECK(report.witness_x->isZero(0.0));
}

TEST_CASE("interference axiom checker flags a scalability violation") {
  const auto report =
      check_standard_interference(ScalabilityViolator{}, 1000, {1.0, 10.0}, 9);
  CHECK_FALSE(report.passed);
  CHECK(report.failure.find("scalability") != std::string::npos);
  REQUIRE(report.witness_x.has_value());
  const double alpha = report.witness_alpha;
  CHECK(alpha > 1.0);
  // the witness reproduces the violation
  const ScalabilityViolator model;
  const Vec fx = model.eval(*report.witness_x);
  const Vec fax = model.eval(alpha * *report.witness_x);
  CHECK(fax[0] > alpha * fx[0]);
}

TEST_CASE("interference axiom checker flags a monotonicity violation") {
  const auto report =
      check_standard_interference(MonotonicityViolator{}, 1000, {1.0, 10.0}, 10);
  CHECK_FALSE(report.passed);
  CHECK(report.failure.find("monotonicity") != std::string::npos);
}

TEST_CASE("utility properties hold on sampled points") {
  const auto model = canonical_two_user();
  Rng rng(314);
  for (int t = 0; t < 1000; ++t) {
    Vec p(2);
    for (Index k = 0; k < 2; ++k) {
      p[k] = rng.uniform() < 0.15 ? 0.0 : rng.log_uniform(1e-6, 1e3);
    }
    const Vec u = eval_utilities(model, p);

    for (Index k = 0; k < 2; ++k) {
      // zero utility exactly at zero power
      CHECK((u[k] == 0.0) == (p[k] == 0.0));
    }

    // scaling everyone up strictly helps every active user
    const double alpha = 1.0 + 9.0 * rng.uniform();
    const Vec u_scaled = eval_utilities(model, (alpha * p).eval());
    for (Index k = 0; k < 2; ++k) {
      if (p[k] > 0.0) CHECK(u_scaled[k] > u[k] * (1.0 - 1e-12));
    }

    // raising only the others can never help user k
    Vec q = p;
    const Index k = rng.next_u64() % 2;
    q[1 - k] += rng.log_uniform(1e-6, 1e3);
    const Vec u_loaded = eval_utilities(model, q);
    CHECK(u_loaded[k] <= u[k] * (1.0 + 1e-12));
  }
}
