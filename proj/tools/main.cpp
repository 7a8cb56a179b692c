// starshape command-line front end.

#include <CLI11.hpp>

#include <algorithm>
#include <numeric>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "starshape/analysis.hpp"
#include "starshape/campaign.hpp"
#include "starshape/config.hpp"
#include "starshape/index_catalog.hpp"
#include "starshape/panel.hpp"
#include "starshape/portfolio.hpp"

namespace fs = std::filesystem;
using namespace starshape;

namespace {

double level_of(const std::string& spec, const std::string& prefix) {
  const std::string rest = spec.substr(prefix.size());
  std::size_t used = 0;
  const double p = std::stod(rest, &used);
  if (used != rest.size()) throw std::invalid_argument("bad level in '" + spec + "'");
  return p;
}

RiskFunctional parse_reward(const std::string& spec) {
  if (spec == "mean" || spec == "E") return functionals::mean_reward();
  if (spec == "median") return functionals::quantile_reward(0.5);
  if (spec.rfind("quantile:", 0) == 0) return functionals::quantile_reward(level_of(spec, "quantile:"));
  throw std::invalid_argument("unknown reward '" + spec + "' (mean, median, quantile:<p>)");
}

RiskFunctional parse_risk(const std::string& spec) {
  if (spec.rfind("es:", 0) == 0) return functionals::expected_shortfall(level_of(spec, "es:"));
  if (spec.rfind("var:", 0) == 0) return functionals::value_at_risk(level_of(spec, "var:"));
  if (spec.rfind("evar:", 0) == 0) return functionals::expectile_var(level_of(spec, "evar:"));
  if (spec == "loss") return functionals::expected_loss();
  throw std::invalid_argument("unknown risk '" + spec + "' (es:<p>, var:<p>, evar:<p>, loss)");
}

// One value per line, optionally `value,weight`; a non-numeric first line is
// taken as a header.
RandomVariable read_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<double> values;
  std::vector<double> weights;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    double v = 0.0;
    if (!(fields >> v)) {
      if (values.empty() && number == 1) continue;
      throw std::runtime_error(path + ":" + std::to_string(number) + ": not a number");
    }
    values.push_back(v);
    double w = 0.0;
    if (fields >> w) weights.push_back(w);
  }
  if (!weights.empty() && weights.size() != values.size()) {
    throw std::runtime_error(path + ": weights given for some rows only");
  }
  if (weights.empty()) return make_rv(std::move(values));
  // Relative weights are fine on the command line.
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0.0)) throw std::runtime_error(path + ": weights must have a positive sum");
  for (auto& w : weights) w /= total;
  return make_rv(std::move(values), std::move(weights));
}

int cmd_analyze(const std::string& prices, const std::string& config_path, const std::string& out,
                const std::string& format_name) {
  AnalysisConfig config = config_path.empty() ? AnalysisConfig{} : load_config(config_path);
  if (!format_name.empty()) config.format = parse_format(format_name);
  const auto ingested = ingest_file(prices);
  for (const auto& d : ingested.dropped) std::cerr << "dropped " << d << "\n";
  const auto result = run_analysis(ingested.panel, config);
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
  if (!out.empty()) fs::create_directories(out);
  for (const auto& table : result.tables) {
    const std::string text = render(table, config.format);
    if (out.empty()) {
      std::cout << "# " << table.period << "\n" << text;
      continue;
    }
    const fs::path file = fs::path(out) / (table.period + "." + format_extension(config.format));
    std::ofstream f(file, std::ios::binary);
    f << text;
    if (!f) throw std::runtime_error("cannot write '" + file.string() + "'");
    std::cerr << "wrote " << file.string() << "\n";
  }
  return 0;
}

int cmd_index(const std::string& values, const std::string& name, const std::vector<double>& p) {
  TableLevels levels;
  if (!p.empty()) levels.tail = p[0];
  if (p.size() > 1) levels.median = p[1];
  const auto spec = find_index(name, levels);
  if (!spec) {
    std::string known;
    for (const auto& n : index_names()) known += " " + n;
    throw std::invalid_argument("unknown index '" + name + "'; known:" + known);
  }
  const auto X = read_values(values);
  std::cout << spec->name << " = " << (*spec)(X).to_string() << "\n";
  return 0;
}

int cmd_optimize(const std::string& prices, const std::string& mu_spec, const std::string& rho_spec,
                 const OptimizerOptions& options) {
  const auto ingested = ingest_file(prices);
  for (const auto& d : ingested.dropped) std::cerr << "dropped " << d << "\n";
  const auto& panel = ingested.panel;
  const auto space = FiniteSpace::uniform(panel.observations());
  std::vector<RandomVariable> assets;
  for (std::size_t j = 0; j < panel.assets(); ++j) assets.emplace_back(space, panel.column(j));
  const Market market(panel.tickers(), std::move(assets));
  for (const auto& w : market.warnings()) std::cerr << "warning: " << w << "\n";

  const auto mu = parse_reward(mu_spec);
  const auto rho = parse_risk(rho_spec);
  const auto r = maximize_acceptability(market, mu, rho, options);
  std::printf("acceptability %s (%s / %s)\n", r.achieved.to_string().c_str(), mu.name().c_str(),
              rho.name().c_str());
  for (std::size_t j = 0; j < market.size(); ++j) {
    if (r.weights[j] > 0.0) std::printf("  %-12s %.6f\n", market.names()[j].c_str(), r.weights[j]);
  }
  std::printf("%s, %d restarts, %d level probes%s%s\n",
              r.certification == Certification::convex_certified ? "convex-certified" : "heuristic",
              r.restarts, static_cast<int>(r.trace.size()),
              r.empty_feasible ? ", no weights with positive reward" : "",
              r.boundary ? ", boundary solution" : "");
  return 0;
}

int cmd_axioms(std::uint64_t seed, int trials) {
  CampaignOptions options;
  options.seed = seed;
  options.trials = trials;
  const auto report = run_axiom_campaign(options);
  std::cout << report.to_text();
  return report.passed() ? 0 : 1;
}

int cmd_synth(std::size_t obs, std::size_t assets, std::uint64_t seed, const std::string& out) {
  const auto panel = synthetic_symmetric_panel(obs, assets, seed);
  if (out.empty()) {
    write_returns_matrix(std::cout, panel);
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  write_returns_matrix(f, panel);
  if (!f) throw std::runtime_error("cannot write '" + out + "'");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star-shaped acceptability indexes on finite return samples"};
  app.require_subcommand(1);

  std::string prices, config, out, format;
  auto* analyze = app.add_subcommand("analyze", "Summary tables of the eight indexes per period");
  analyze->add_option("--prices", prices, "Prices (date,ticker,close) or returns matrix CSV")->required();
  analyze->add_option("--config", config, "Key/value config file");
  analyze->add_option("--out", out, "Output directory (default: stdout)");
  analyze->add_option("--format", format, "csv, markdown or json (overrides config)");

  std::string values, index_name;
  std::vector<double> levels;
  auto* index = app.add_subcommand("index", "Evaluate one index on a column of values");
  index->add_option("--values", values, "CSV with value[,weight] rows")->required();
  index->add_option("--index", index_name, "Index name (VaR, ES, RAROC, ..., GLR_coherent)")->required();
  index->add_option("--p", levels, "Tail level, optionally followed by the median level");

  std::string mu_spec = "mean", rho_spec = "es:0.05";
  OptimizerOptions opt;
  auto* optimize = app.add_subcommand("optimize", "Maximize RAROC over long-only weights");
  optimize->add_option("--prices", prices, "Prices or returns matrix CSV")->required();
  optimize->add_option("--mu", mu_spec, "Reward: mean, median, quantile:<p>");
  optimize->add_option("--rho", rho_spec, "Risk: es:<p>, var:<p>, evar:<p>, loss");
  optimize->add_option("--restarts", opt.restarts, "Inner search restarts");
  optimize->add_option("--tol", opt.tol, "Relative bisection width on the level");
  optimize->add_option("--seed", opt.seed, "Seed for random restarts");

  std::uint64_t seed = 20240101;
  int trials = 1000;
  auto* axioms = app.add_subcommand("axioms", "Run the seeded property campaign");
  axioms->add_option("--seed", seed, "Root seed");
  axioms->add_option("--trials", trials, "Number of trials");

  std::size_t obs = 2000, assets = 20;
  std::uint64_t synth_seed = 42;
  std::string synth_out;
  auto* synth = app.add_subcommand("synth", "Write a synthetic symmetric returns panel");
  synth->add_option("--obs", obs, "Observations");
  synth->add_option("--assets", assets, "Assets");
  synth->add_option("--seed", synth_seed, "Seed");
  synth->add_option("--out", synth_out, "Output CSV (default: stdout)");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*analyze) return cmd_analyze(prices, config, out, format);
    if (*index) return cmd_index(values, index_name, levels);
    if (*optimize) return cmd_optimize(prices, mu_spec, rho_spec, opt);
    if (*axioms) return cmd_axioms(seed, trials);
    if (*synth) return cmd_synth(obs, assets, synth_seed, synth_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
