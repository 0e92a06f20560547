#include <doctest.h>

#include <cmath>

#include "maxmin/norms.hpp"

using namespace maxmin;

namespace {

Vec make_vec(std::initializer_list<double> values) {
  Vec v(static_cast<Index>(values.size()));
  Index i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

}  // namespace

TEST_CASE("norm evaluation matches the definitions") {
  const auto l1 = MonotoneNorm::l1(10.0);
  const auto linf = MonotoneNorm::linf(10.0);
  CHECK(l1(make_vec({3.0, 4.0})) == doctest::Approx(7.0));
  CHECK(linf(make_vec({3.0, 4.0})) == doctest::Approx(4.0));

  const auto wlinf = MonotoneNorm::weighted_linf(make_vec({2.0, 1.0}), 10.0);
  CHECK(wlinf(make_vec({3.0, 4.0})) == doctest::Approx(6.0));
  const auto wl1 = MonotoneNorm::weighted_l1(make_vec({2.0, 1.0}), 10.0);
  CHECK(wl1(make_vec({3.0, 4.0})) == doctest::Approx(10.0));

  // norms act on absolute values
  CHECK(l1(make_vec({-3.0, 4.0})) == doctest::Approx(7.0));
  CHECK(norm_eval(linf, make_vec({-3.0, -4.0})) == doctest::Approx(4.0));
}

TEST_CASE("norm construction validates its inputs") {
  CHECK_THROWS_AS(MonotoneNorm::l1(0.0), UsageError);
  CHECK_THROWS_AS(MonotoneNorm::l1(-1.0), UsageError);
  CHECK_THROWS_AS(MonotoneNorm::weighted_l1(make_vec({1.0, 0.0}), 1.0), UsageError);
  CHECK_THROWS_AS(MonotoneNorm::weighted_linf(Vec(), 1.0), UsageError);

  const auto wlinf = MonotoneNorm::weighted_linf(make_vec({2.0, 1.0}), 10.0);
  CHECK_THROWS_AS(wlinf(make_vec({1.0, 2.0, 3.0})), UsageError);
}

TEST_CASE("restriction keeps kind, budget, and the surviving weights") {
  const auto wl1 = MonotoneNorm::weighted_l1(make_vec({2.0, 3.0, 5.0}), 7.0);
  const auto reduced = wl1.restricted({0, 2});
  CHECK(reduced.kind() == NormKind::WeightedL1);
  CHECK(reduced.budget() == doctest::Approx(7.0));
  CHECK(reduced(make_vec({1.0, 1.0})) == doctest::Approx(7.0));

  const auto linf = MonotoneNorm::linf(4.0).restricted({1});
  CHECK(linf(make_vec({3.0})) == doctest::Approx(3.0));
  CHECK_THROWS_AS(wl1.restricted({}), UsageError);
  CHECK_THROWS_AS(wl1.restricted({3}), UsageError);
}

TEST_CASE("axiom checker accepts the shipped norm kinds") {
  for (int dim : {1, 2, 5}) {
    CHECK(check_monotone_norm(MonotoneNorm::l1(1.0), dim, 300, 11).passed);
    CHECK(check_monotone_norm(MonotoneNorm::linf(1.0), dim, 300, 12).passed);
  }
  Vec w(3);
  w << 0.5, 2.0, 7.0;
  CHECK(check_monotone_norm(MonotoneNorm::weighted_l1(w, 1.0), 3, 300, 13).passed);
  CHECK(check_monotone_norm(MonotoneNorm::weighted_linf(w, 1.0), 3, 300, 14).passed);
}

TEST_CASE("axiom checker flags a definiteness failure") {
  // max minus min vanishes on the diagonal, e.g. at (1, 1)
  const auto spread = [](const Vec& x) { return x.maxCoeff() - x.minCoeff(); };
  const auto report = check_monotone_norm(spread, 2, 200, 5);
  CHECK_FALSE(report.passed);
  CHECK(report.failure.find("definiteness") != std::string::npos);
}

TEST_CASE("axiom checker flags a monotonicity failure") {
  // ||(x1 - x2, x2)||_1 is a norm but not monotone: (0,1) <= (1,1) yet the
  // values are 2 and 1.
  const auto skewed = [](const Vec& x) {
    return std::abs(x[0] - x[1]) + std::abs(x[1]);
  };
  const auto report = check_monotone_norm(skewed, 2, 2000, 6);
  CHECK_FALSE(report.passed);
  CHECK(report.failure.find("monotonicity") != std::string::npos);
  REQUIRE(report.witness_x.has_value());
  REQUIRE(report.witness_y.has_value());
  CHECK(skewed(*report.witness_x) > skewed(*report.witness_y));
}

TEST_CASE("axiom checker flags a homogeneity failure") {
  const auto shifted = [](const Vec& x) {
    const double s = x.cwiseAbs().sum();
    return s > 0.0 ? s + 1.0 : 0.0;
  };
  const auto report = check_monotone_norm(shifted, 2, 500, 7);
  CHECK_FALSE(report.passed);
}

TEST_CASE("norm kind names round-trip") {
  for (auto kind : {NormKind::L1, NormKind::LInf, NormKind::WeightedL1,
                    NormKind::WeightedLInf}) {
    CHECK(parse_norm_kind(norm_kind_name(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_norm_kind("l3"), UsageError);
}
