#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace starshape {

/// Date x ticker matrix of log returns with no missing cells.
class ReturnPanel {
 public:
  ReturnPanel(std::vector<std::string> dates, std::vector<std::string> tickers,
              std::vector<std::vector<double>> columns);

  const std::vector<std::string>& dates() const noexcept { return dates_; }
  const std::vector<std::string>& tickers() const noexcept { return tickers_; }
  std::size_t observations() const noexcept { return dates_.size(); }
  std::size_t assets() const noexcept { return tickers_.size(); }
  /// Returns of one asset in date order.
  const std::vector<double>& column(std::size_t asset) const { return columns_.at(asset); }

  /// Rows with start <= date <= end (ISO dates compare as strings).
  ReturnPanel slice(const std::string& start, const std::string& end) const;
  ReturnPanel scaled(double factor) const;

 private:
  std::vector<std::string> dates_;
  std::vector<std::string> tickers_;
  std::vector<std::vector<double>> columns_;
};

enum class PanelFormat { prices_long, returns_matrix, autodetect };

struct IngestResult {
  ReturnPanel panel;
  /// Tickers dropped for gaps, with the reason.
  std::vector<std::string> dropped;
};

/// prices_long: header `date,ticker,close`; log returns per ticker on the
/// union of dates, tickers lacking any date dropped. returns_matrix: header
/// `date,<ticker>...`; tickers with empty or NA cells dropped.
IngestResult ingest(std::istream& in, PanelFormat format = PanelFormat::autodetect);
IngestResult ingest_file(const std::string& path, PanelFormat format = PanelFormat::autodetect);

void write_returns_matrix(std::ostream& out, const ReturnPanel& panel);

/// I.i.d. returns from symmetric laws (normal, Laplace, two-point; one per
/// asset, volatility 0.5% to 3%), business-day dates from 2015-01-02.
ReturnPanel synthetic_symmetric_panel(std::size_t observations, std::size_t assets,
                                      std::uint64_t seed);

bool is_iso_date(const std::string& s);

}  // namespace starshape
