#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "../oracles.hpp"
#include "starshape/distribution.hpp"
#include "starshape/random_variable.hpp"
#include "starshape/statistics.hpp"

using namespace starshape;

namespace {

RandomVariable sample4() { return make_rv({-1, 1, 2, 3}); }

}  // namespace

TEST(MakeRv, BuildsEqualWeightSpace) {
  const auto X = sample4();
  ASSERT_EQ(X.size(), 4u);
  EXPECT_TRUE(X.space().is_uniform());
  for (std::size_t i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(X.space().weight(i), 0.25);
}

TEST(MakeRv, Singleton) {
  const auto X = make_rv({5});
  EXPECT_TRUE(X.is_constant());
  EXPECT_EQ(left_quantile(X, 0.3), 5.0);
}

TEST(MakeRv, RejectsBadInput) {
  EXPECT_THROW(make_rv({}), std::invalid_argument);
  EXPECT_THROW(make_rv({1.0, NAN}), std::invalid_argument);
  EXPECT_THROW(make_rv({1.0, INFINITY}), std::invalid_argument);
  EXPECT_THROW(make_rv({1, 2}, std::vector<double>{0.5, 0.6}), std::invalid_argument);
  EXPECT_THROW(make_rv({1, 2}, std::vector<double>{1.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(make_rv({1, 2}, std::vector<double>{1.0}), std::invalid_argument);
}

TEST(MakeRv, ToleratesTinyWeightDrift) {
  const auto X = make_rv({1, 2}, std::vector<double>{0.5 + 4e-10, 0.5});
  EXPECT_NEAR(X.space().weight(0) + X.space().weight(1), 1.0, 1e-15);
}

TEST(Quantile, Examples) {
  const auto X = sample4();
  EXPECT_EQ(left_quantile(X, 0.25), -1.0);
  EXPECT_EQ(left_quantile(X, 0.5), 1.0);
  EXPECT_EQ(left_quantile(X, 0.0), -1.0);
  EXPECT_EQ(left_quantile(X, 1.0), 3.0);
  EXPECT_EQ(left_quantile(make_rv({5}), 0.77), 5.0);
  EXPECT_THROW(left_quantile(X, 1.5), std::invalid_argument);
  EXPECT_THROW(left_quantile(X, -0.1), std::invalid_argument);
}

TEST(Quantile, MatchesOracles) {
  oracle::Generator gen(11);
  for (int t = 0; t < 300; ++t) {
    const auto n = gen.size(1, 40);
    const bool equal = gen.coin();
    const auto v = gen.values(n);
    const auto w = gen.weights(n, equal);
    const auto X = make_rv(v, w);
    const auto law = oracle::law_of(v, w);
    for (double u = 0.0; u <= 1.0; u += 0.01) {
      EXPECT_EQ(left_quantile(X, u), oracle::left_quantile(law, u)) << "u=" << u;
      if (equal) EXPECT_EQ(left_quantile(X, u), oracle::order_statistic_quantile(v, u));
    }
  }
}

TEST(Quantile, NondecreasingInLevel) {
  oracle::Generator gen(12);
  for (int t = 0; t < 100; ++t) {
    const auto n = gen.size(1, 30);
    const auto X = make_rv(gen.values(n), gen.weights(n, gen.coin()));
    double previous = -INFINITY;
    for (int k = 0; k <= 200; ++k) {
      const double q = left_quantile(X, k / 200.0);
      EXPECT_GE(q, previous);
      previous = q;
    }
  }
}

TEST(Expectation, Examples) {
  EXPECT_DOUBLE_EQ(expectation(sample4()), 1.25);
  EXPECT_DOUBLE_EQ(expectation(make_rv({5})), 5.0);
  const auto X = make_rv({-1, 1});
  EXPECT_DOUBLE_EQ(expectation(X, Scenario({1.0, 0.0})), -1.0);
  EXPECT_THROW(expectation(X, Scenario({1.0})), std::invalid_argument);
}

TEST(Transform, Examples) {
  const auto X = sample4();
  const auto pos = positive_part(X);
  const auto neg = negative_part(X);
  EXPECT_EQ(std::vector<double>(pos.values().begin(), pos.values().end()),
            (std::vector<double>{0, 1, 2, 3}));
  EXPECT_EQ(std::vector<double>(neg.values().begin(), neg.values().end()),
            (std::vector<double>{1, 0, 0, 0}));
  const auto A = make_rv({-1, 3});
  const auto B = A.with_values({1, 1});
  const auto M = mix(A, B, 0.5);
  EXPECT_EQ(M[0], 0.0);
  EXPECT_EQ(M[1], 2.0);
  const auto lo = pointwise_min(X, 1.5);
  EXPECT_EQ(lo[3], 1.5);
  EXPECT_EQ(lo[0], -1.0);
}

TEST(Transform, SpaceMismatch) {
  const auto A = make_rv({1, 2});
  const auto B = make_rv({1, 2}, std::vector<double>{0.3, 0.7});
  EXPECT_THROW(mix(A, B, 0.5), std::invalid_argument);
  EXPECT_THROW(pointwise_min(A, make_rv({1, 2, 3})), std::invalid_argument);
  EXPECT_THROW(mix(A, A, 1.5), std::invalid_argument);
}

TEST(Transform, AffineRoundTripIsExact) {
  oracle::Generator gen(13);
  for (int t = 0; t < 200; ++t) {
    const auto X = make_rv(gen.values(gen.size(1, 20)));
    for (double lambda : {2.0, 0.5, 4.0, -8.0}) {
      const auto back = affine(affine(X, lambda, 0.0), 1.0 / lambda, 0.0);
      for (std::size_t i = 0; i < X.size(); ++i) EXPECT_EQ(back[i], X[i]);
    }
  }
}

TEST(IntegratedQuantile, Examples) {
  const auto X = sample4();
  EXPECT_DOUBLE_EQ(integrated_quantile(X, 0.25), -0.25);
  EXPECT_NEAR(integrated_quantile(X, 0.5), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(integrated_quantile(X, 1.0), 1.25);
  EXPECT_THROW(integrated_quantile(X, 2.0), std::invalid_argument);
}

TEST(IntegratedQuantile, FullIntegralIsMeanAndMatchesOracle) {
  oracle::Generator gen(14);
  for (int t = 0; t < 300; ++t) {
    const auto n = gen.size(1, 50);
    const auto v = gen.values(n);
    const auto w = gen.weights(n, gen.coin());
    const auto X = make_rv(v, w);
    EXPECT_NEAR(integrated_quantile(X, 1.0), expectation(X), 1e-12);
    const auto law = oracle::law_of(v, w);
    for (double u : {0.01, 0.05, 0.3, 0.5, 0.9}) {
      EXPECT_NEAR(integrated_quantile(X, u), static_cast<double>(oracle::integrated_quantile(law, u)),
                  1e-12);
    }
  }
}

TEST(IntegratedQuantile, WithScenario) {
  const auto X = sample4();
  const Scenario Q({0.5, 0.0, 0.0, 0.5});
  EXPECT_DOUBLE_EQ(integrated_quantile(X, 0.5, Q), -0.5);
  EXPECT_DOUBLE_EQ(left_quantile(X, 0.6, Q), 3.0);
}

TEST(LawInvariance, PermutationLeavesStatisticsUnchanged) {
  oracle::Generator gen(15);
  for (int t = 0; t < 200; ++t) {
    auto v = gen.values(gen.size(2, 40));
    const auto X = make_rv(v);
    std::shuffle(v.begin(), v.end(), gen.rng);
    const auto P = make_rv(v);
    for (double u : {0.0, 0.05, 0.37, 0.5, 1.0}) {
      EXPECT_EQ(left_quantile(X, u), left_quantile(P, u));
      EXPECT_EQ(integrated_quantile(X, u), integrated_quantile(P, u));
    }
    EXPECT_EQ(Distribution(X).mean(), Distribution(P).mean());
  }
}

TEST(Dominance, Examples) {
  const auto Y = make_rv({-1, 0, 2});
  const auto X = affine(Y, 1.0, 1.0);
  EXPECT_TRUE(dominates(X, Y, StochasticOrder::first));
  EXPECT_TRUE(dominates(X, Y, StochasticOrder::second));
  EXPECT_TRUE(dominates(Y, Y, StochasticOrder::first));
  EXPECT_TRUE(dominates(Y, Y, StochasticOrder::second));
  const auto flat = make_rv({0, 0});
  const auto spread = flat.with_values({-1, 1});
  EXPECT_TRUE(dominates(flat, spread, StochasticOrder::second));
  EXPECT_FALSE(dominates(spread, flat, StochasticOrder::second));
  EXPECT_FALSE(dominates(flat, spread, StochasticOrder::first));
  EXPECT_THROW(dominates(flat, make_rv({1, 2, 3}), StochasticOrder::first), std::invalid_argument);
}

TEST(Dominance, UnderScenarioSet) {
  const auto X = make_rv({1, -1});
  const auto Y = X.with_values({0, 0});
  const std::vector<Scenario> both{Scenario({1.0, 0.0}), Scenario({0.0, 1.0})};
  EXPECT_FALSE(dominates(X, Y, StochasticOrder::first, both));
  EXPECT_TRUE(dominates(X, Y, StochasticOrder::first, std::span(both).first(1)));
}

TEST(Dominance, FirstOrderImpliesSecond) {
  oracle::Generator gen(16);
  int first_count = 0;
  for (int t = 0; t < 500; ++t) {
    const auto n = gen.size(2, 12);
    const auto space = FiniteSpace::weighted(gen.weights(n, gen.coin()));
    auto v = gen.values(n);
    const RandomVariable Y(space, v);
    for (auto& x : v) x += gen.coin(0.7) ? gen.uniform(0, 1) : gen.uniform(-0.3, 0);
    const RandomVariable X(space, v);
    if (dominates(X, Y, StochasticOrder::first)) {
      ++first_count;
      EXPECT_TRUE(dominates(X, Y, StochasticOrder::second));
    }
  }
  EXPECT_GT(first_count, 20);
}

TEST(DescriptiveStats, Examples) {
  const std::vector<double> a{1, 2, 3};
  const auto s = descriptive_stats(a);
  EXPECT_DOUBLE_EQ(s.mean, 2.0);
  EXPECT_DOUBLE_EQ(s.stdev, 1.0);
  EXPECT_NEAR(s.skewness, 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(s.minimum, 1.0);
  EXPECT_DOUBLE_EQ(s.maximum, 3.0);

  const std::vector<double> b{-1, 0, 1};
  EXPECT_NEAR(descriptive_stats(b).kurtosis, -1.5, 1e-12);

  const std::vector<double> c(5, 0.3);
  const auto d = descriptive_stats(c);
  EXPECT_EQ(d.stdev, 0.0);
  EXPECT_TRUE(std::isnan(d.skewness));
  EXPECT_TRUE(std::isnan(d.kurtosis));
}

TEST(DescriptiveStats, InfinitiesExcludedButReported) {
  const std::vector<double> v{1, 2, INFINITY, 3};
  const auto s = descriptive_stats(v);
  EXPECT_DOUBLE_EQ(s.mean, 2.0);
  EXPECT_EQ(s.infinite_count, 1u);
  EXPECT_EQ(s.finite_count, 3u);
  EXPECT_TRUE(std::isinf(s.maximum));
  EXPECT_DOUBLE_EQ(s.minimum, 1.0);
  const std::vector<double> one{1.0, INFINITY};
  EXPECT_THROW(descriptive_stats(one), std::invalid_argument);
}

TEST(DescriptiveStats, MatchesTextbookFormulas) {
  oracle::Generator gen(17);
  for (int t = 0; t < 50; ++t) {
    const auto v = gen.values(gen.size(3, 60));
    const auto s = descriptive_stats(v);
    long double m = 0;
    for (double x : v) m += x;
    m /= v.size();
    long double m2 = 0, m3 = 0, m4 = 0;
    for (double x : v) {
      const long double d = x - m;
      m2 += d * d;
      m3 += d * d * d;
      m4 += d * d * d * d;
    }
    const auto n = static_cast<long double>(v.size());
    if (m2 == 0) continue;
    EXPECT_NEAR(s.mean, static_cast<double>(m), 1e-12);
    EXPECT_NEAR(s.stdev, static_cast<double>(std::sqrt(m2 / (n - 1))), 1e-12);
    EXPECT_NEAR(s.skewness, static_cast<double>((m3 / n) / std::pow(m2 / n, 1.5L)), 1e-9);
    EXPECT_NEAR(s.kurtosis, static_cast<double>((m4 / n) / ((m2 / n) * (m2 / n)) - 3), 1e-9);
  }
}
