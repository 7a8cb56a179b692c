#include <benchmark/benchmark.h>

#include <random>

#include "starshape/acceptability.hpp"
#include "starshape/campaign.hpp"
#include "starshape/portfolio.hpp"
#include "starshape/risk_measures.hpp"

using namespace starshape;

namespace {

RandomVariable normal_position(std::size_t n, std::uint64_t seed = 1, double drift = 0.0005) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z(drift, 0.01);
  std::vector<double> v(n);
  for (auto& x : v) x = z(rng);
  return make_rv(v);
}

void BM_QuantileAndES(benchmark::State& state) {
  const auto X = normal_position(state.range(0));
  for (auto _ : state) {
    const Distribution law(X);
    benchmark::DoNotOptimize(var(law, 0.05) + es(law, 0.05));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_QuantileAndES)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_Expectile(benchmark::State& state) {
  const auto X = normal_position(state.range(0));
  const Distribution law(X);
  for (auto _ : state) benchmark::DoNotOptimize(expectile(law, 0.1));
}
BENCHMARK(BM_Expectile)->RangeMultiplier(4)->Range(64, 16384);

void BM_AlphaES(benchmark::State& state) {
  const auto X = normal_position(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(alpha_es(X));
}
BENCHMARK(BM_AlphaES)->RangeMultiplier(4)->Range(64, 16384);

void BM_IndexFromFamilyES(benchmark::State& state) {
  const auto X = normal_position(state.range(0));
  const auto fam = families::expected_shortfall();
  for (auto _ : state) benchmark::DoNotOptimize(index_from_family(fam, X));
}
BENCHMARK(BM_IndexFromFamilyES)->Arg(250)->Arg(2000);

void BM_RdrHull(benchmark::State& state) {
  // Positive drift so the search is not skipped by the mu <= 0 shortcut.
  const auto X = normal_position(state.range(0), 1, 0.004);
  const auto mu = functionals::mean_reward();
  const auto D = deviations::es_centered(0.05);
  for (auto _ : state) benchmark::DoNotOptimize(rdr_monotone(mu, D, X));
}
BENCHMARK(BM_RdrHull)->Arg(20)->Arg(50)->Arg(250);

void BM_CampaignTrials(benchmark::State& state) {
  CampaignOptions opt;
  opt.trials = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_axiom_campaign(opt).violations.size());
}
BENCHMARK(BM_CampaignTrials)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Optimizer(benchmark::State& state) {
  const auto space = FiniteSpace::uniform(250);
  std::vector<RandomVariable> assets;
  std::vector<std::string> names;
  for (int j = 0; j < state.range(0); ++j) {
    const auto Y = normal_position(250, 100 + j);
    assets.emplace_back(space, std::vector<double>(Y.values().begin(), Y.values().end()));
    names.push_back("A" + std::to_string(j));
  }
  const Market m(names, assets);
  OptimizerOptions opt;
  opt.restarts = 16;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        maximize_acceptability(m, functionals::mean_reward(), functionals::expected_shortfall(0.05), opt)
            .achieved);
  }
}
BENCHMARK(BM_Optimizer)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
