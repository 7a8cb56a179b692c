#include <gtest/gtest.h>

#include <cmath>

#include "../oracles.hpp"
#include "starshape/axioms.hpp"
#include "starshape/robust.hpp"

using namespace starshape;

namespace {

IndexSpec var_index() {
  return {"VaR", "", [](const RandomVariable& X) { return alpha_var(X); }, {true, false}};
}
IndexSpec es_index() {
  return {"ES", "", [](const RandomVariable& X) { return alpha_es(X); }, {false, true}};
}

using EA = ExtendedAcceptability;

}  // namespace

TEST(Ensemble, Examples) {
  const IndexEnsemble ens({var_index(), es_index()});
  const auto X = make_rv({-1, 1, 2, 3});
  EXPECT_DOUBLE_EQ(combine(ens, X, CombineRule::minimum()).value(), 1.0);
  EXPECT_DOUBLE_EQ(combine(ens, X, CombineRule::maximum()).value(), 3.0);
  EXPECT_DOUBLE_EQ(combine(ens, X, CombineRule::median()).value(), 1.0);
  EXPECT_DOUBLE_EQ(combine(ens, X, CombineRule::order_stat(2)).value(), 3.0);

  const auto zero = make_rv({0, 0, 0});
  for (auto rule : {CombineRule::minimum(), CombineRule::median(), CombineRule::maximum()}) {
    EXPECT_TRUE(combine(ens, zero, rule).is_infinite());
  }
  EXPECT_THROW(IndexEnsemble({}), std::invalid_argument);
  EXPECT_THROW(combine(ens, X, CombineRule::order_stat(3)), std::invalid_argument);
}

TEST(Ensemble, SingletonIsIdentity) {
  oracle::Generator gen(61);
  const IndexEnsemble ens({es_index()});
  for (int t = 0; t < 50; ++t) {
    const auto n = gen.size(2, 30);
    const auto X = make_rv(gen.values(n), gen.weights(n, gen.coin()));
    for (auto rule : {CombineRule::minimum(), CombineRule::median(), CombineRule::maximum()}) {
      EXPECT_EQ(combine(ens, X, rule), alpha_es(X));
    }
  }
}

TEST(Ensemble, CombineValuesOrdering) {
  const std::vector<EA> v{EA::exact(2.0), EA::infinity(), EA::exact(0.5), EA::capped(1e6)};
  EXPECT_EQ(combine_values(v, CombineRule::minimum()), EA::exact(0.5));
  EXPECT_TRUE(combine_values(v, CombineRule::maximum()).is_infinite());
  // Lower median of four: the second smallest.
  EXPECT_EQ(combine_values(v, CombineRule::median()), EA::exact(2.0));
}

TEST(Ensemble, CombinationsStayMonotoneAndStarShaped) {
  oracle::Generator gen(62);
  const IndexEnsemble ens(table_indexes());
  const double lambdas[] = {1.0, 1.5, 2.0, 10.0};
  for (auto rule : {CombineRule::minimum(), CombineRule::median(), CombineRule::maximum()}) {
    const auto idx = combined_index(ens, rule, "combo");
    for (int t = 0; t < 60; ++t) {
      const auto n = gen.size(2, 25);
      const auto space = FiniteSpace::weighted(gen.weights(n, gen.coin()));
      auto v = gen.values(n);
      const RandomVariable X(space, v);
      for (auto& x : v) x -= gen.uniform(0, 1);
      const RandomVariable Y(space, v);
      EXPECT_FALSE(check_star_shaped(idx, X, lambdas));
      EXPECT_FALSE(check_monotone(idx, X, Y));
    }
  }
}

TEST(Scenarios, Examples) {
  const auto X = make_rv({-1, 1, 2, 3});
  const auto base = scenario_evaluate(var_index(), X, ScenarioSet::base_only(X.space()));
  ASSERT_EQ(base.size(), 1u);
  EXPECT_EQ(base.at("P"), alpha_var(X));

  const ScenarioSet set({"P", "crash", "twin"},
                        {Scenario({0.25, 0.25, 0.25, 0.25}), Scenario({1, 0, 0, 0}),
                         Scenario({0.25, 0.25, 0.25, 0.25})},
                        "P");
  const auto out = scenario_evaluate(var_index(), X, set);
  EXPECT_EQ(out.at("crash"), EA::exact(0.0));
  EXPECT_EQ(out.at("twin"), out.at("P"));
}

TEST(Scenarios, MatchDirectEvaluationOnReweightedLaw) {
  oracle::Generator gen(63);
  for (int t = 0; t < 100; ++t) {
    const auto n = gen.size(2, 20);
    const auto v = gen.values(n);
    const auto X = make_rv(v);
    std::vector<Scenario> sc;
    std::vector<std::string> names;
    std::vector<std::vector<double>> ws;
    for (int k = 0; k < 4; ++k) {
      ws.push_back(gen.weights(n, false));
      sc.emplace_back(ws.back());
      names.push_back("Q" + std::to_string(k));
    }
    const auto out = scenario_evaluate(es_index(), X, ScenarioSet(names, sc, "Q0"));
    for (int k = 0; k < 4; ++k) {
      EXPECT_TRUE(same_value(out.at(names[k]), alpha_es(make_rv(v, ws[k])), 1e-12));
    }
  }
}

TEST(Scenarios, RejectsNonLawInvariantIndex) {
  auto idx = var_index();
  idx.flags.law_invariant = false;
  const auto X = make_rv({-1, 1});
  EXPECT_THROW(scenario_evaluate(idx, X, ScenarioSet::base_only(X.space())), std::invalid_argument);
}

TEST(Uncertainty, Examples) {
  const auto u = uncertainty_measures({{"a", EA::exact(0.5)}, {"P", EA::exact(1.0)}, {"b", EA::exact(2.0)}}, "P");
  EXPECT_DOUBLE_EQ(u.range, 1.5);
  EXPECT_DOUBLE_EQ(u.lower_half, 0.5);
  EXPECT_DOUBLE_EQ(u.upper_half, 1.0);
  EXPECT_EQ(u.robust_inf, EA::exact(0.5));
  EXPECT_FALSE(u.has_infinite);

  const auto single = uncertainty_measures({{"P", EA::exact(4.0)}}, "P");
  EXPECT_EQ(single.range, 0.0);
  EXPECT_EQ(single.lower_half, 0.0);
  EXPECT_EQ(single.upper_half, 0.0);

  EXPECT_THROW(uncertainty_measures({{"a", EA::exact(1.0)}}, "P"), std::invalid_argument);
}

TEST(Uncertainty, Infinities) {
  const auto u = uncertainty_measures({{"P", EA::exact(1.0)}, {"b", EA::infinity()}}, "P");
  EXPECT_TRUE(u.has_infinite);
  EXPECT_EQ(u.range, INFINITY);
  EXPECT_EQ(u.lower_half, 0.0);
  EXPECT_EQ(u.upper_half, INFINITY);

  const auto both = uncertainty_measures({{"P", EA::infinity()}, {"b", EA::capped(1e6)}}, "P");
  EXPECT_TRUE(both.undetermined);
  EXPECT_TRUE(std::isnan(both.range));
}

TEST(Uncertainty, RangeGrowsWithTheScenarioSet) {
  oracle::Generator gen(64);
  std::map<std::string, EA> values{{"P", EA::exact(1.0)}};
  double last = 0.0;
  for (int k = 0; k < 30; ++k) {
    values.emplace("Q" + std::to_string(k), EA::exact(gen.uniform(0, 5)));
    const double r = uncertainty_measures(values, "P").range;
    EXPECT_GE(r, last);
    last = r;
  }
}
