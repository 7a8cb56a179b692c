#include <gtest/gtest.h>

#include <cmath>

#include "../oracles.hpp"
#include "starshape/axioms.hpp"
#include "starshape/functionals.hpp"
#include "starshape/risk_measures.hpp"

using namespace starshape;

namespace {

RandomVariable sample4() { return make_rv({-1, 1, 2, 3}); }

struct Instance {
  std::vector<double> v, w;
  RandomVariable X;
  oracle::Law law;
};

Instance random_instance(oracle::Generator& gen, std::size_t lo = 1, std::size_t hi = 40) {
  const auto n = gen.size(lo, hi);
  auto v = gen.values(n);
  auto w = gen.weights(n, gen.coin());
  auto X = make_rv(v, w);
  auto law = oracle::law_of(v, w);
  return {std::move(v), std::move(w), std::move(X), std::move(law)};
}

}  // namespace

TEST(VaR, Examples) {
  const auto X = sample4();
  EXPECT_EQ(var(X, 0.25), 1.0);
  EXPECT_EQ(var(X, 0.5), -1.0);
  EXPECT_EQ(var(X, 0.0), 1.0);
  EXPECT_EQ(var(make_rv({-2}), 0.3), 2.0);
  EXPECT_THROW(var(X, 1.2), std::invalid_argument);
}

TEST(ES, Examples) {
  const auto X = sample4();
  EXPECT_NEAR(es(X, 0.5), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(es(X, 1.0), -1.25);
  EXPECT_DOUBLE_EQ(es(X, 0.25), 1.0);
  EXPECT_DOUBLE_EQ(es(X, 0.0), 1.0);
  EXPECT_THROW(es(X, -0.5), std::invalid_argument);
}

TEST(ES, MatchesIntervalOracle) {
  oracle::Generator gen(21);
  for (int t = 0; t < 300; ++t) {
    const auto I = random_instance(gen);
    for (double p : {0.0, 0.01, 0.05, 0.2, 0.5, 0.77, 1.0}) {
      EXPECT_NEAR(es(I.X, p), oracle::es(I.law, p), 1e-10 * (1 + std::abs(oracle::es(I.law, p))));
    }
  }
}

TEST(ES, LevelMonotoneAndAboveVaR) {
  oracle::Generator gen(22);
  for (int t = 0; t < 200; ++t) {
    const auto I = random_instance(gen);
    double prev_var = INFINITY, prev_es = INFINITY;
    for (int k = 1; k <= 100; ++k) {
      const double p = k / 100.0;
      const double v = var(I.X, p), e = es(I.X, p);
      EXPECT_LE(v, prev_var);
      EXPECT_LE(e, prev_es + 1e-12);
      EXPECT_GE(e, v - 1e-12);
      prev_var = v;
      prev_es = e;
    }
  }
}

TEST(Expectile, Examples) {
  oracle::Generator gen(23);
  for (int t = 0; t < 100; ++t) {
    const auto I = random_instance(gen);
    EXPECT_NEAR(evar(I.X, 0.5), -Distribution(I.X).mean(), 1e-10);
  }
  EXPECT_DOUBLE_EQ(expectile(make_rv({3.5}), 0.2), 3.5);
  EXPECT_THROW(expectile(sample4(), 0.0), std::invalid_argument);
  EXPECT_THROW(expectile(sample4(), 1.0), std::invalid_argument);
}

TEST(Expectile, TwoPointAgainstResidualScan) {
  // Brute-force scan of the defining residual on a 1e-6 grid over [-1, 1].
  const auto X = make_rv({-1, 1});
  double best_y = 0, best_r = INFINITY;
  for (int k = 0; k <= 2000000; ++k) {
    const double y = -1 + k * 1e-6;
    const double r = std::abs(0.25 * 0.5 * (1 - y) - 0.75 * 0.5 * (y + 1));
    if (r < best_r) {
      best_r = r;
      best_y = y;
    }
  }
  EXPECT_NEAR(expectile(X, 0.25), best_y, 1e-6);
  EXPECT_NEAR(expectile(X, 0.25), -0.5, 1e-12);
}

TEST(Expectile, MatchesBisectionOracleAndResidual) {
  oracle::Generator gen(24);
  for (int t = 0; t < 300; ++t) {
    const auto I = random_instance(gen);
    const Distribution law(I.X);
    for (double p : {0.01, 0.1, 0.3, 0.5, 0.8, 0.97}) {
      const double y = expectile(law, p);
      EXPECT_LT(std::abs(expectile_residual(law, p, y)), 1e-12);
      EXPECT_NEAR(y, oracle::expectile(I.law, p), 1e-9 * (1 + std::abs(y)));
    }
  }
}

TEST(Choquet, Examples) {
  const auto X = sample4();
  EXPECT_DOUBLE_EQ(choquet(X, Distortion::identity()), -1.25);
  EXPECT_NEAR(choquet(X, Distortion::es_clamp(0.5)), 0.0, 1e-15);
  EXPECT_EQ(choquet(X, Distortion::step(0.25)), 1.0);
  EXPECT_THROW(Distortion::piecewise_linear({0, 0.5, 1}, {0, 0.7, 0.6}), std::invalid_argument);
  EXPECT_THROW(Distortion::piecewise_linear({0, 1}, {0.1, 1}), std::invalid_argument);
}

TEST(Choquet, ReducesToVaRESAndMean) {
  oracle::Generator gen(25);
  for (int t = 0; t < 300; ++t) {
    const auto I = random_instance(gen);
    EXPECT_NEAR(choquet(I.X, Distortion::identity()), -Distribution(I.X).mean(), 1e-12);
    for (double p : {0.05, 0.1, 0.25, 0.5, 0.9}) {
      EXPECT_EQ(choquet(I.X, Distortion::step(p)), var(I.X, p));
      EXPECT_NEAR(choquet(I.X, Distortion::es_clamp(p)), es(I.X, p), 1e-10);
    }
  }
}

TEST(Choquet, MatchesLayerCakeOracle) {
  oracle::Generator gen(26);
  const auto g = Distortion::piecewise_linear({0, 0.1, 0.4, 1}, {0, 0.5, 0.8, 1});
  EXPECT_TRUE(g.is_concave());
  EXPECT_FALSE(Distortion::piecewise_linear({0, 0.5, 1}, {0, 0.2, 1}).is_concave());
  for (int t = 0; t < 200; ++t) {
    const auto I = random_instance(gen);
    const double want = oracle::choquet(I.law, [&](double y) { return g(y); });
    EXPECT_NEAR(choquet(I.X, g), want, 1e-10 * (1 + std::abs(want)));
    const double es_want = oracle::choquet(I.law, [](double y) { return std::min(1.0, y / 0.3); });
    EXPECT_NEAR(choquet(I.X, Distortion::es_clamp(0.3)), es_want, 1e-10 * (1 + std::abs(es_want)));
  }
}

TEST(Choquet, ConcaveDistortionIsConvexStepIsNot) {
  oracle::Generator gen(27);
  const auto es_rho = functionals::distortion(Distortion::es_clamp(0.2));
  const auto var_rho = functionals::distortion(Distortion::step(0.2));
  int var_violations = 0;
  for (int t = 0; t < 500; ++t) {
    const auto n = gen.size(2, 20);
    const auto space = FiniteSpace::weighted(gen.weights(n, gen.coin()));
    const RandomVariable X(space, gen.values(n)), Y(space, gen.values(n));
    for (double lambda : {0.25, 0.5, 0.75}) {
      EXPECT_FALSE(violates_convexity(es_rho, X, Y, lambda));
      var_violations += violates_convexity(var_rho, X, Y, lambda) ? 1 : 0;
    }
  }
  EXPECT_GT(var_violations, 0);
}

TEST(LVaR, Examples) {
  const auto X = sample4();
  EXPECT_EQ(lvar(X, LossThreshold::constant(0.25)), var(X, 0.25));
  EXPECT_EQ(lvar(make_rv({0.0}), LossThreshold({0, 1}, {0.1, 0.5})), 0.0);
  EXPECT_EQ(lvar(X, LossThreshold({0, 0.5}, {0.25, 0.5})), 1.0);
  EXPECT_THROW(LossThreshold({0, 1}, {0.5, 0.2}), std::invalid_argument);
  EXPECT_THROW(LossThreshold({0.5}, {0.2}), std::invalid_argument);
}

TEST(LVaR, MatchesDenseGridAndIsStarShaped) {
  oracle::Generator gen(28);
  for (int t = 0; t < 200; ++t) {
    const auto I = random_instance(gen, 2, 30);
    std::vector<double> bps{0}, levels{gen.uniform(0.01, 0.2)};
    for (int k = 0; k < 3; ++k) {
      bps.push_back(bps.back() + gen.uniform(0.05, 1.0));
      levels.push_back(std::min(1.0, levels.back() + gen.uniform(0.0, 0.3)));
    }
    const LossThreshold theta(bps, levels);
    double grid_max = -INFINITY;
    const double t_end = bps.back() + 5.0;
    for (int k = 0; k <= 20000; ++k) {
      const double s = t_end * k / 20000.0;
      grid_max = std::max(grid_max, var(I.X, theta(s)) - s);
    }
    for (double b : bps) grid_max = std::max(grid_max, var(I.X, theta(b)) - b);
    EXPECT_NEAR(lvar(I.X, theta), grid_max, 1e-12);

    const auto rho = functionals::benchmark_loss_var(theta);
    const double lambdas[] = {1.0, 1.5, 2.0, 10.0};
    EXPECT_FALSE(check_star_shaped_risk(rho, I.X, lambdas));
  }
}

TEST(Translation, AllMeasuresAreCashAdditive) {
  oracle::Generator gen(29);
  const LossThreshold theta({0, 0.3}, {0.05, 0.2});
  const std::vector<RiskFunctional> measures{
      functionals::value_at_risk(0.1),   functionals::expected_shortfall(0.1),
      functionals::expectile_var(0.2),   functionals::distortion(Distortion::es_clamp(0.3)),
      functionals::benchmark_loss_var(theta), functionals::expected_loss()};
  for (int t = 0; t < 200; ++t) {
    const auto I = random_instance(gen);
    const double c = gen.uniform(-3, 3);
    for (const auto& rho : measures) {
      EXPECT_FALSE(check_cash_additive(rho, I.X, c)) << rho.name();
    }
  }
}

TEST(Homogeneity, PositivelyHomogeneousMeasures) {
  oracle::Generator gen(30);
  for (int t = 0; t < 200; ++t) {
    const auto I = random_instance(gen);
    for (double lambda : {0.1, 2.0, 7.5}) {
      const auto L = affine(I.X, lambda, 0.0);
      auto near = [&](double a, double b) { EXPECT_NEAR(a, lambda * b, 1e-10 * (1 + std::abs(a))); };
      near(var(L, 0.1), var(I.X, 0.1));
      near(es(L, 0.1), es(I.X, 0.1));
      near(evar(L, 0.2), evar(I.X, 0.2));
      near(choquet(L, Distortion::es_clamp(0.4)), choquet(I.X, Distortion::es_clamp(0.4)));
    }
  }
}

TEST(Deviation, Examples) {
  const auto X = sample4();
  EXPECT_DOUBLE_EQ(interquantile_range(X, 0.25, 0.5), 2.0);
  EXPECT_DOUBLE_EQ(es_deviation(X, 0.5), 1.25);
  const auto C = make_rv({4, 4, 4});
  EXPECT_EQ(es_deviation(C, 0.05), 0.0);
  EXPECT_EQ(interquantile_range(C, 0.05, 0.5), 0.0);
  EXPECT_EQ(deviations::centered(functionals::expected_shortfall(0.1))(C), 0.0);
  EXPECT_THROW(interquantile_range(X, 0.5, 0.25), std::invalid_argument);
  EXPECT_THROW(deviations::es_centered(1.5), std::invalid_argument);
}

TEST(Deviation, NonnegativeAndTranslationInsensitive) {
  oracle::Generator gen(31);
  const std::vector<DeviationFunctional> devs{
      deviations::es_centered(0.05), deviations::interquantile(0.05, 0.5),
      deviations::centered(functionals::expected_shortfall(0.2))};
  for (int t = 0; t < 300; ++t) {
    const auto I = random_instance(gen);
    const double c = gen.uniform(-5, 5);
    for (const auto& D : devs) {
      const double d = D(I.X);
      EXPECT_GE(d, 0.0);
      EXPECT_NEAR(D(affine(I.X, 1.0, c)), d, 1e-10) << D.name();
    }
  }
}

TEST(Deviation, CenteredClampsNegativeValues) {
  // -E[X] centered is identically 0; a reward used as risk goes negative.
  const auto bad = functionals::reward_of(functionals::expected_shortfall(0.2));
  EXPECT_EQ(deviations::centered(bad)(make_rv({-1, 0, 5})), 0.0);
}
