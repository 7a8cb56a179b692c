#include "starshape/panel.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace starshape {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::size_t begin = 0;
  while (true) {
    const auto comma = line.find(',', begin);
    out.push_back(trim(std::string_view(line).substr(begin, comma - begin)));
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  return out;
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::runtime_error malformed(std::size_t line, const std::string& what) {
  return std::runtime_error("malformed CSV at line " + std::to_string(line) + ": " + what);
}

bool parse_number(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

bool is_missing(const std::string& s) {
  const auto l = lower(s);
  return l.empty() || l == "na" || l == "nan" || l == "null";
}

struct Rows {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;
};

Rows read_rows(std::istream& in) {
  Rows r;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (trim(line).empty()) continue;
    auto fields = split(line);
    if (r.header.empty()) {
      r.header = std::move(fields);
      continue;
    }
    if (fields.size() != r.header.size()) {
      throw malformed(number, "expected " + std::to_string(r.header.size()) + " fields, got " +
                                  std::to_string(fields.size()));
    }
    r.rows.push_back(std::move(fields));
    r.line_numbers.push_back(number);
  }
  if (r.header.empty()) throw std::runtime_error("malformed CSV: empty input");
  return r;
}

IngestResult ingest_prices(const Rows& r) {
  std::map<std::string, std::map<std::string, double>> prices;  // ticker -> date -> close
  std::set<std::string> all_dates;
  for (std::size_t k = 0; k < r.rows.size(); ++k) {
    const auto& row = r.rows[k];
    const auto line = r.line_numbers[k];
    if (!is_iso_date(row[0])) throw malformed(line, "bad date '" + row[0] + "'");
    if (row[1].empty()) throw malformed(line, "empty ticker");
    double close = 0.0;
    if (!parse_number(row[2], close)) throw malformed(line, "bad close '" + row[2] + "'");
    if (!(close > 0.0)) {
      throw std::runtime_error("nonpositive price at line " + std::to_string(line));
    }
    if (!prices[row[1]].emplace(row[0], close).second) {
      throw std::runtime_error("duplicate (date, ticker) (" + row[0] + ", " + row[1] +
                               ") at line " + std::to_string(line));
    }
    all_dates.insert(row[0]);
  }
  const std::vector<std::string> dates(all_dates.begin(), all_dates.end());
  if (dates.size() < 2) throw std::runtime_error("price file needs at least two dates");

  std::vector<std::string> tickers;
  std::vector<std::vector<double>> columns;
  std::vector<std::string> dropped;
  for (const auto& [ticker, series] : prices) {
    if (series.size() != dates.size()) {
      dropped.push_back(ticker + ": missing " + std::to_string(dates.size() - series.size()) +
                        " of " + std::to_string(dates.size()) + " dates");
      continue;
    }
    std::vector<double> ret;
    ret.reserve(dates.size() - 1);
    double previous = series.at(dates.front());
    for (std::size_t t = 1; t < dates.size(); ++t) {
      const double p = series.at(dates[t]);
      ret.push_back(std::log(p / previous));
      previous = p;
    }
    tickers.push_back(ticker);
    columns.push_back(std::move(ret));
  }
  return {ReturnPanel(std::vector<std::string>(dates.begin() + 1, dates.end()), std::move(tickers),
                      std::move(columns)),
          std::move(dropped)};
}

IngestResult ingest_matrix(const Rows& r) {
  if (r.header.size() < 2) throw std::runtime_error("malformed CSV: returns matrix needs tickers");
  const std::size_t m = r.header.size() - 1;
  std::vector<std::string> dates;
  std::vector<std::vector<double>> columns(m);
  std::vector<bool> missing(m, false);
  for (std::size_t k = 0; k < r.rows.size(); ++k) {
    const auto& row = r.rows[k];
    const auto line = r.line_numbers[k];
    if (!is_iso_date(row[0])) throw malformed(line, "bad date '" + row[0] + "'");
    if (!dates.empty() && row[0] <= dates.back()) {
      throw malformed(line, "dates must be strictly increasing");
    }
    dates.push_back(row[0]);
    for (std::size_t j = 0; j < m; ++j) {
      double v = 0.0;
      if (is_missing(row[j + 1])) {
        missing[j] = true;
      } else if (!parse_number(row[j + 1], v)) {
        throw malformed(line, "bad value '" + row[j + 1] + "'");
      }
      columns[j].push_back(v);
    }
  }
  std::vector<std::string> tickers;
  std::vector<std::vector<double>> kept;
  std::vector<std::string> dropped;
  std::set<std::string> seen;
  for (std::size_t j = 0; j < m; ++j) {
    const auto& name = r.header[j + 1];
    if (name.empty() || !seen.insert(name).second) {
      throw std::runtime_error("malformed CSV: empty or repeated ticker '" + name + "'");
    }
    if (missing[j]) {
      dropped.push_back(name + ": missing values");
      continue;
    }
    tickers.push_back(name);
    kept.push_back(std::move(columns[j]));
  }
  return {ReturnPanel(std::move(dates), std::move(tickers), std::move(kept)), std::move(dropped)};
}

}  // namespace

bool is_iso_date(const std::string& s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  int y = 0;
  unsigned mo = 0, d = 0;
  if (std::sscanf(s.c_str(), "%4d-%2u-%2u", &y, &mo, &d) != 3) return false;
  for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9}) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return std::chrono::year_month_day(std::chrono::year(y), std::chrono::month(mo),
                                     std::chrono::day(d))
      .ok();
}

ReturnPanel::ReturnPanel(std::vector<std::string> dates, std::vector<std::string> tickers,
                         std::vector<std::vector<double>> columns)
    : dates_(std::move(dates)), tickers_(std::move(tickers)), columns_(std::move(columns)) {
  if (tickers_.size() != columns_.size()) {
    throw std::invalid_argument("ReturnPanel: one column per ticker");
  }
  for (std::size_t t = 1; t < dates_.size(); ++t) {
    if (!(dates_[t - 1] < dates_[t])) {
      throw std::invalid_argument("ReturnPanel: dates must be strictly increasing");
    }
  }
  for (const auto& c : columns_) {
    if (c.size() != dates_.size()) throw std::invalid_argument("ReturnPanel: ragged column");
    for (double v : c) {
      if (!std::isfinite(v)) throw std::invalid_argument("ReturnPanel: non-finite return");
    }
  }
}

ReturnPanel ReturnPanel::slice(const std::string& start, const std::string& end) const {
  const auto first = std::lower_bound(dates_.begin(), dates_.end(), start) - dates_.begin();
  const auto last = std::upper_bound(dates_.begin(), dates_.end(), end) - dates_.begin();
  const auto b = static_cast<std::size_t>(first);
  const auto e = static_cast<std::size_t>(std::max(first, last));
  std::vector<std::vector<double>> cols;
  for (const auto& c : columns_) cols.emplace_back(c.begin() + b, c.begin() + e);
  return ReturnPanel(std::vector<std::string>(dates_.begin() + b, dates_.begin() + e), tickers_,
                     std::move(cols));
}

ReturnPanel ReturnPanel::scaled(double factor) const {
  auto cols = columns_;
  for (auto& c : cols) {
    for (auto& v : c) v *= factor;
  }
  return ReturnPanel(dates_, tickers_, std::move(cols));
}

IngestResult ingest(std::istream& in, PanelFormat format) {
  const Rows rows = read_rows(in);
  std::vector<std::string> header;
  for (const auto& h : rows.header) header.push_back(lower(h));
  const bool long_header = header == std::vector<std::string>{"date", "ticker", "close"};
  if (header.empty() || header.front() != "date") {
    throw std::runtime_error("malformed CSV: first column must be 'date'");
  }
  if (format == PanelFormat::autodetect) {
    format = long_header ? PanelFormat::prices_long : PanelFormat::returns_matrix;
  }
  if (format == PanelFormat::prices_long) {
    if (!long_header) throw std::runtime_error("malformed CSV: expected header date,ticker,close");
    return ingest_prices(rows);
  }
  return ingest_matrix(rows);
}

IngestResult ingest_file(const std::string& path, PanelFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return ingest(in, format);
}

void write_returns_matrix(std::ostream& out, const ReturnPanel& panel) {
  out << "date";
  for (const auto& t : panel.tickers()) out << ',' << t;
  out << '\n';
  char buf[32];
  for (std::size_t t = 0; t < panel.observations(); ++t) {
    out << panel.dates()[t];
    for (std::size_t j = 0; j < panel.assets(); ++j) {
      std::snprintf(buf, sizeof buf, "%.10g", panel.column(j)[t]);
      out << ',' << buf;
    }
    out << '\n';
  }
}

ReturnPanel synthetic_symmetric_panel(std::size_t observations, std::size_t assets,
                                      std::uint64_t seed) {
  using namespace std::chrono;
  std::vector<std::string> dates;
  sys_days day = year{2015} / January / 2;
  char buf[16];
  while (dates.size() < observations) {
    const weekday w{day};
    if (w != Saturday && w != Sunday) {
      const year_month_day ymd{day};
      std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                    static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
      dates.emplace_back(buf);
    }
    day += days{1};
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> z(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);
  std::vector<std::string> tickers;
  std::vector<std::vector<double>> columns;
  for (std::size_t j = 0; j < assets; ++j) {
    char name[32];
    std::snprintf(name, sizeof name, "SYM%02zu", j + 1);
    tickers.emplace_back(name);
    const double vol = 0.005 + 0.025 * unit(rng);
    std::vector<double> col(observations);
    for (auto& v : col) {
      const double sign = unit(rng) < 0.5 ? -1.0 : 1.0;
      switch (j % 3) {
        case 0:
          v = vol * z(rng);
          break;
        case 1:
          v = sign * vol * expo(rng) / std::sqrt(2.0);
          break;
        default:
          v = sign * vol;
          break;
      }
    }
    columns.push_back(std::move(col));
  }
  return ReturnPanel(std::move(dates), std::move(tickers), std::move(columns));
}

}  // namespace starshape
