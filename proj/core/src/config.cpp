#include "starshape/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>

#include "starshape/panel.hpp"

namespace starshape {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

std::runtime_error bad(std::size_t line, const std::string& what) {
  return std::runtime_error("config line " + std::to_string(line) + ": " + what);
}

double number(const std::string& value, std::size_t line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size() || !std::isfinite(v)) {
    throw bad(line, "expected a number, got '" + value + "'");
  }
  return v;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "markdown" || name == "md") return OutputFormat::markdown;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown output format '" + name + "' (csv, markdown, json)");
}

std::string format_extension(OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::markdown:
      return "md";
    case OutputFormat::json:
      return "json";
  }
  return "txt";
}

AnalysisConfig parse_config(std::istream& in) {
  AnalysisConfig cfg;
  std::map<std::string, Period> periods;
  std::vector<std::string> order;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string text = trim(raw);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw bad(line, "expected key = value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (value.empty()) throw bad(line, "empty value for '" + key + "'");

    if (key.rfind("period.", 0) == 0) {
      const auto dot = key.rfind('.');
      const std::string name = key.substr(7, dot - 7);
      const std::string field = key.substr(dot + 1);
      if (dot <= 7 || name.empty() || (field != "start" && field != "end")) {
        throw bad(line, "expected period.<name>.start or period.<name>.end");
      }
      if (!is_iso_date(value)) throw bad(line, "'" + value + "' is not a YYYY-MM-DD date");
      auto [it, inserted] = periods.try_emplace(name, Period{name, "", ""});
      if (inserted) order.push_back(name);
      (field == "start" ? it->second.start : it->second.end) = value;
    } else if (key == "level.tail" || key == "level.median") {
      const double p = number(value, line);
      if (!(p > 0.0 && p < 1.0)) throw bad(line, key + " must lie in (0,1)");
      (key == "level.tail" ? cfg.levels.tail : cfg.levels.median) = p;
    } else if (key == "x_max") {
      cfg.x_max = number(value, line);
      if (!(cfg.x_max > 1.0)) throw bad(line, "x_max must exceed 1");
    } else if (key == "tol") {
      cfg.tol = number(value, line);
      if (!(cfg.tol > 0.0 && cfg.tol < 1.0)) throw bad(line, "tol must lie in (0,1)");
    } else if (key == "seed") {
      std::uint64_t s = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), s);
      if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw bad(line, "seed must be a nonnegative integer");
      }
      cfg.seed = s;
    } else if (key == "format") {
      try {
        cfg.format = parse_format(value);
      } catch (const std::invalid_argument& e) {
        throw bad(line, e.what());
      }
    } else {
      throw bad(line, "unknown key '" + key + "'");
    }
  }
  if (!(cfg.levels.tail < cfg.levels.median)) {
    throw std::runtime_error("config: level.tail must be below level.median");
  }
  for (const auto& name : order) {
    const auto& p = periods.at(name);
    if (p.start.empty() || p.end.empty()) {
      throw std::runtime_error("config: period '" + name + "' needs both start and end");
    }
    if (p.end < p.start) throw std::runtime_error("config: period '" + name + "' ends before it starts");
    cfg.periods.push_back(p);
  }
  return cfg;
}

AnalysisConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  return parse_config(in);
}

}  // namespace starshape
