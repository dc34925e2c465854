#include <gtest/gtest.h>

#include <random>

#include "pcm/deviation.hpp"
#include "pcm/metric.hpp"
#include "support/oracles.hpp"

using pcm::Rational;
using pcm::testing::q;

TEST(MetricCatalogTest, Discrete) {
  EXPECT_EQ(pcm::discrete_metric<Rational>(3, 3), 0);
  EXPECT_EQ(pcm::discrete_metric<Rational>(3, 5), 1);
  EXPECT_EQ(pcm::discrete_metric<Rational>(q(1, 2), pcm::parse_exact("0.5")), 0);
  EXPECT_EQ(pcm::discrete_metric<double>(0.5, 1.0 / 2.0), 0.0);
}

TEST(MetricCatalogTest, Euclidean) {
  EXPECT_EQ(pcm::euclidean_metric<Rational>(5, 3), 2);
  EXPECT_EQ(pcm::euclidean_metric<Rational>(q(7, 3), q(7, 3)), 0);
  EXPECT_EQ(pcm::euclidean_metric<Rational>(1, 1000000), 999999);
  EXPECT_EQ(pcm::euclidean_metric<double>(1, 1e6), 999999.0);
}

TEST(MetricCatalogTest, D1) {
  // |1-3| / (1 + |1-3|) = 2/3
  EXPECT_EQ(pcm::d1_metric<Rational>(1, 3), q(2, 3));
  EXPECT_EQ(pcm::d1_metric<Rational>(4, 4), 0);
  EXPECT_EQ(pcm::d1_metric<Rational>(1, 1000000), q(999999, 1000000));
}

TEST(MetricCatalogTest, BoundedRatio) {
  EXPECT_EQ(pcm::bounded_ratio_metric<Rational>(2, 2), 0);
  EXPECT_EQ(pcm::bounded_ratio_metric<Rational>(1, 2), q(1, 2));
  EXPECT_EQ(pcm::bounded_ratio_metric<Rational>(2, 1), q(1, 2));
  EXPECT_EQ(pcm::bounded_ratio_metric<double>(1, 2), 0.5);
}

TEST(MetricCatalogTest, RejectsNonPositiveArguments) {
  EXPECT_THROW(pcm::discrete_metric<double>(0, 1), std::invalid_argument);
  EXPECT_THROW(pcm::euclidean_metric<Rational>(1, -2), std::invalid_argument);
  EXPECT_THROW(pcm::d1_metric<double>(-1, 1), std::invalid_argument);
  EXPECT_THROW(pcm::bounded_ratio_metric<Rational>(0, 0), std::invalid_argument);
}

TEST(MetricCatalogTest, NamedLookup) {
  for (auto name : pcm::metric_names()) {
    EXPECT_EQ(pcm::named_metric<double>(name).name, name);
  }
  EXPECT_FALSE(pcm::named_metric<Rational>("euclidean").declared_bound);
  const auto ratio = pcm::named_metric<Rational>("ratio");
  ASSERT_TRUE(ratio.declared_bound);
  EXPECT_EQ(ratio.declared_bound->value, 1);
  EXPECT_TRUE(ratio.declared_bound->strict);
  EXPECT_FALSE(pcm::named_metric<Rational>("discrete").declared_bound->strict);
  EXPECT_THROW(pcm::named_metric<double>("manhattan"), std::invalid_argument);
}

TEST(InducedMetricTest, Examples) {
  std::mt19937_64 rng(11);
  const auto ratio = pcm::named_metric<Rational>("ratio");
  const auto induced = pcm::induce_metric_from_deviation(pcm::induce_deviation(ratio));
  EXPECT_EQ(induced.name, "induced(td(ratio))");
  for (int i = 0; i < 200; ++i) {
    const auto x = pcm::testing::small_rational(rng, 40);
    const auto y = pcm::testing::small_rational(rng, 40);
    EXPECT_EQ(induced(x, y), ratio(x, y));
  }

  // Kii(1, 2, 1) = 1 - min(2, 1/2) = 1/2.
  const auto from_kii = pcm::induce_metric_from_deviation(pcm::named_indicator<Rational>("Kii"));
  EXPECT_EQ(from_kii(1, 2), q(1, 2));
  EXPECT_EQ(from_kii.name, "induced(Kii)");

  const auto from_ei = pcm::induce_metric_from_deviation(pcm::named_indicator<Rational>("EI"));
  for (int i = 0; i < 200; ++i) {
    const auto x = pcm::testing::small_rational(rng, 40);
    const auto y = pcm::testing::small_rational(rng, 40);
    EXPECT_EQ(from_ei(x, y), abs(x - y));
  }
}

// Round trip: metric -> deviation -> metric is the identity, for every
// catalog metric, in both numeric modes.
TEST(InducedMetricTest, RoundTripIsPointwiseIdentity) {
  std::mt19937_64 rng(3);
  for (auto name : pcm::metric_names()) {
    const auto dr = pcm::named_metric<Rational>(name);
    const auto df = pcm::named_metric<double>(name);
    const auto rr = pcm::induce_metric_from_deviation(pcm::induce_deviation(dr));
    const auto rf = pcm::induce_metric_from_deviation(pcm::induce_deviation(df));
    for (int i = 0; i < 1000; ++i) {
      const auto x = pcm::testing::small_rational(rng, 1000);
      const auto y = pcm::testing::small_rational(rng, 1000);
      EXPECT_EQ(rr(x, y), dr(x, y)) << name;
      const double u = pcm::testing::log_uniform(rng, 1e-3, 1e3);
      const double v = pcm::testing::log_uniform(rng, 1e-3, 1e3);
      EXPECT_LE(std::abs(rf(u, v) - df(u, v)), 1e-15) << name;
    }
  }
}
