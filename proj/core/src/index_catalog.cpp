#include "starshape/index_catalog.hpp"

#include <algorithm>
#include <cctype>

namespace starshape {
namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

IndexSpec glr_coherent_spec() {
  return {"GLR_coherent", "E[X]/E[X^-]",
          [](const RandomVariable& X) { return glr(X, GlrMode::coherent); },
          {.scale_invariant = true, .quasi_concave = true}};
}

}  // namespace

std::vector<IndexSpec> table_indexes(const TableLevels& levels, RdrEvaluation rdr,
                                     const RdrSearchOptions& search) {
  const double pt = levels.tail;
  const double pm = levels.median;
  const auto mean = functionals::mean_reward();
  const auto es_tail = functionals::expected_shortfall(pt);
  const auto var_tail = functionals::value_at_risk(pt);
  const auto q_median = functionals::quantile_reward(pm);
  const auto es_dev = deviations::es_centered(pt);
  const auto iqr = deviations::interquantile(pt, pm);

  auto rdr_eval = [rdr, search](RiskFunctional mu, DeviationFunctional D) -> IndexSpec::Evaluator {
    if (rdr == RdrEvaluation::plain_ratio) {
      return [mu, D](const RandomVariable& X) { return rdr_ratio(mu, D, X); };
    }
    return [mu, D, search](const RandomVariable& X) { return rdr_monotone(mu, D, X, search); };
  };

  std::vector<IndexSpec> out;
  out.push_back({"VaR", "alpha_VaR: P(X<0) <= 1/(1+x)",
                 [](const RandomVariable& X) { return alpha_var(X); },
                 {.scale_invariant = true, .quasi_concave = false}});
  out.push_back({"ES", "alpha_ES: ES^{1/(1+x)}(X) <= 0",
                 [](const RandomVariable& X) { return alpha_es(X); },
                 {.scale_invariant = true, .quasi_concave = true}});
  out.push_back({"RAROC", "E[X]/ES^tail(X)",
                 [mean, es_tail](const RandomVariable& X) { return raroc(mean, es_tail, X); },
                 {.scale_invariant = true, .quasi_concave = true}});
  out.push_back({"RAROC_SS", "-VaR^median(X)/VaR^tail(X)",
                 [q_median, var_tail](const RandomVariable& X) {
                   return raroc(q_median, var_tail, X);
                 },
                 {.scale_invariant = true, .quasi_concave = false}});
  out.push_back({"GLR", "E[X^+]/E[X^-]",
                 [](const RandomVariable& X) { return glr(X, GlrMode::star); },
                 {.scale_invariant = true, .quasi_concave = false}});
  out.push_back({"GLR_SS", "-VaR^median(X^+)/VaR^tail(-X^-)",
                 [q_median, var_tail](const RandomVariable& X) {
                   return glr_generalized(q_median, var_tail, X);
                 },
                 {.scale_invariant = true, .quasi_concave = false}});
  out.push_back({"RDR", "E[X]/ES^tail(X - E[X])", rdr_eval(mean, es_dev),
                 {.scale_invariant = true, .quasi_concave = rdr == RdrEvaluation::plain_ratio}});
  out.push_back({"RDR_SS", "-VaR^median(X)/(VaR^tail(X) - VaR^median(X))",
                 rdr_eval(q_median, iqr), {.scale_invariant = true, .quasi_concave = false}});
  return out;
}

std::optional<IndexSpec> find_index(const std::string& name, const TableLevels& levels,
                                    RdrEvaluation rdr) {
  const std::string key = lower(name);
  for (auto& spec : table_indexes(levels, rdr)) {
    if (lower(spec.name) == key) return spec;
  }
  if (key == "glr_coherent") return glr_coherent_spec();
  return std::nullopt;
}

std::vector<std::string> index_names() {
  std::vector<std::string> names;
  for (const auto& spec : table_indexes()) names.push_back(spec.name);
  names.push_back("GLR_coherent");
  return names;
}

}  // namespace starshape
