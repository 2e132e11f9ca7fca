#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "topostab/geometry.hpp"
#include "topostab/norms.hpp"

namespace topostab {

enum class OutputFormat { Csv, Json };

struct RunConfig {
  std::vector<std::filesystem::path> inputs;  // each: date column, then asset columns
  std::size_t window = 30;
  std::vector<std::string> assets;  // empty selects every column in input order
  OutputFormat format = OutputFormat::Csv;
  std::filesystem::path out;  // empty or "-" writes to stdout
  std::optional<std::filesystem::path> normalized_out;
  std::optional<double> max_scale;  // unset: window diameter
  unsigned threads = 1;
};

// Throws InvalidConfig when the window is < 2, the format is unknown or fewer
// than two assets are named explicitly.
void validate(const RunConfig& config);

struct IngestReport {
  std::size_t rows_seen = 0;     // distinct timestamps in the base file
  std::size_t rows_dropped = 0;  // missing, non-numeric or not present in every file
};

// Inner join of all selected assets on the timestamp column. Row order follows the
// first file that carries a selected asset.
PriceTable ingest(const RunConfig& config, IngestReport* report = nullptr);

// Per-asset min-max scaling of prices to [0, 1]; a constant column maps to 0.
RowMatrix normalize_prices(const PriceTable& prices);

struct RunResult {
  PriceTable prices;
  ReturnMatrix returns;
  NormSeries series;
};

// ingest -> log returns -> windows -> norm series -> emitted files.
RunResult run(const RunConfig& config);

// Timestamps of the first return row of each window, attached to the series.
std::vector<std::string> window_timestamps(const ReturnMatrix& returns, const NormSeries& series);

// Header `t,timestamp,l0,l1,c1`, LF endings, empty c1 when absent.
std::string format_csv(const NormSeries& series, const std::vector<std::string>& timestamps);

// Array of objects with the CSV keys; c1 is null when absent.
std::string format_json(const NormSeries& series, const std::vector<std::string>& timestamps);

struct ParsedNorms {
  NormSeries series;
  std::vector<std::string> timestamps;
};
ParsedNorms parse_norm_csv(const std::string& text);
ParsedNorms parse_norm_json(const std::string& text);

std::string format_normalized_csv(const PriceTable& prices);

// One line per pair: t,timestamp,dim,birth,death (death "inf" for essential classes).
std::string format_diagrams_csv(const std::vector<WindowCloud>& windows,
                                const std::vector<WindowDiagrams>& diagrams,
                                const std::vector<std::string>& timestamps);

// Writes via a temporary sibling file renamed into place; "-" or empty means stdout.
void write_output(const std::filesystem::path& path, const std::string& contents);

void emit(const RunResult& result, const RunConfig& config);

}  // namespace topostab
