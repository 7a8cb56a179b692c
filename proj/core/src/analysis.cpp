#include "starshape/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "starshape/index_catalog.hpp"
#include "starshape/parallel.hpp"
#include "starshape/robust.hpp"

namespace starshape {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::array<double, 6> cells(const DescriptiveStats& s) {
  return {s.mean, s.stdev, s.skewness, s.kurtosis, s.minimum, s.maximum};
}

std::string fixed2(double v) {
  if (std::isnan(v)) return "NA";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

nlohmann::json json_number(double v) {
  if (std::isnan(v)) return "NA";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

std::string footer_line(const SummaryTable& t) {
  std::ostringstream os;
  bool any = false;
  for (const auto& row : t.rows) {
    if (row.stats.infinite_count == 0 && row.stats.nan_count == 0) continue;
    os << (any ? "; " : "") << row.name << " " << row.stats.infinite_count << " infinite";
    if (row.stats.nan_count) os << ", " << row.stats.nan_count << " undefined";
    any = true;
  }
  return any ? os.str() : "none";
}

std::string render_csv(const SummaryTable& t) {
  std::ostringstream os;
  os << "Index";
  for (const char* c : kSummaryColumns) os << ',' << c;
  os << '\n';
  for (const auto& row : t.rows) {
    os << row.name;
    for (double v : cells(row.stats)) os << ',' << fixed2(v);
    os << '\n';
  }
  return os.str();
}

std::string render_markdown(const SummaryTable& t) {
  std::ostringstream os;
  os << "### " << t.period << " (" << t.start << " to " << t.end << ", " << t.observations
     << " observations, " << t.tickers.size() << " assets)\n\n";
  os << "| Index |";
  for (const char* c : kSummaryColumns) os << ' ' << c << " |";
  os << "\n|---|";
  for (std::size_t i = 0; i < kSummaryColumns.size(); ++i) os << "---:|";
  os << '\n';
  for (const auto& row : t.rows) {
    os << "| " << row.name << " |";
    for (double v : cells(row.stats)) os << ' ' << fixed2(v) << " |";
    os << '\n';
  }
  os << "\nExcluded from moments: " << footer_line(t) << '\n';
  return os.str();
}

std::string render_json(const SummaryTable& t) {
  nlohmann::ordered_json j;
  j["period"] = t.period;
  j["start"] = t.start;
  j["end"] = t.end;
  j["observations"] = t.observations;
  j["assets"] = t.tickers.size();
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r;
    r["index"] = row.name;
    const auto c = cells(row.stats);
    for (std::size_t i = 0; i < c.size(); ++i) r[kSummaryColumns[i]] = json_number(c[i]);
    rows.push_back(std::move(r));
  }
  auto& footer = j["footer"] = nlohmann::ordered_json::object();
  for (const auto& row : t.rows) {
    footer[row.name] = {{"infinite", row.stats.infinite_count},
                        {"undefined", row.stats.nan_count},
                        {"finite", row.stats.finite_count}};
  }
  return j.dump(2) + "\n";
}

SummaryTable analyze_period(const ReturnPanel& panel, const Period& period,
                            const std::vector<IndexSpec>& indexes) {
  SummaryTable t;
  t.period = period.name;
  t.start = period.start;
  t.end = period.end;
  t.observations = panel.observations();
  t.tickers = panel.tickers();
  const std::size_t m = panel.assets();
  t.values.assign(m, {});
  t.mean_returns.assign(m, 0.0);
  const auto space = FiniteSpace::uniform(panel.observations());
  parallel_for(m, [&](std::size_t a) {
    const RandomVariable X(space, panel.column(a));
    t.mean_returns[a] = expectation(X);
    std::vector<ExtendedAcceptability> members;
    for (const auto& spec : indexes) members.push_back(spec(X));
    auto& out = t.values[a];
    for (const auto& v : members) out.push_back(v.extended());
    for (auto rule : {CombineRule::minimum(), CombineRule::median(), CombineRule::maximum()}) {
      out.push_back(combine_values(members, rule).extended());
    }
  });
  t.rows.push_back({kSummaryRows[0], summarize(t.mean_returns)});
  for (std::size_t k = 1; k < kSummaryRows.size(); ++k) {
    std::vector<double> column(m);
    for (std::size_t a = 0; a < m; ++a) column[a] = t.values[a][k - 1];
    t.rows.push_back({kSummaryRows[k], summarize(column)});
  }
  return t;
}

}  // namespace

DescriptiveStats summarize(const std::vector<double>& samples) {
  std::size_t finite = 0;
  for (double v : samples) finite += std::isfinite(v) ? 1 : 0;
  if (finite >= 2) return descriptive_stats(samples);
  DescriptiveStats s;
  s.mean = s.stdev = s.skewness = s.kurtosis = kNaN;
  s.minimum = s.maximum = kNaN;
  s.finite_count = finite;
  bool first = true;
  for (double v : samples) {
    if (std::isnan(v)) {
      ++s.nan_count;
      continue;
    }
    if (std::isinf(v)) ++s.infinite_count;
    if (std::isfinite(v)) s.mean = v;
    s.minimum = first ? v : std::min(s.minimum, v);
    s.maximum = first ? v : std::max(s.maximum, v);
    first = false;
  }
  return s;
}

AnalysisResult run_analysis(const ReturnPanel& panel, const AnalysisConfig& config) {
  if (panel.assets() == 0) throw std::runtime_error("run_analysis: panel has no assets");
  std::vector<Period> periods = config.periods;
  if (periods.empty() && panel.observations() > 0) {
    periods.push_back({"whole", panel.dates().front(), panel.dates().back()});
  }
  const auto indexes = table_indexes(config.levels, RdrEvaluation::plain_ratio);
  AnalysisResult result;
  for (const auto& period : periods) {
    const auto part = panel.slice(period.start, period.end);
    if (part.observations() < 2) {
      throw std::runtime_error("period '" + period.name + "' has " +
                               std::to_string(part.observations()) + " observations (need 2)");
    }
    if (part.observations() < 30) {
      result.warnings.push_back("period '" + period.name + "' has only " +
                                std::to_string(part.observations()) + " observations");
    }
    result.tables.push_back(analyze_period(part, period, indexes));
  }
  return result;
}

std::string render(const SummaryTable& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return render_csv(table);
    case OutputFormat::markdown:
      return render_markdown(table);
    case OutputFormat::json:
      return render_json(table);
  }
  return {};
}

}  // namespace starshape
