#include "topostab/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>
#include <spdlog/spdlog.h>

#include "topostab/csv.hpp"
#include "topostab/error.hpp"

namespace topostab {

namespace fs = std::filesystem;

void validate(const RunConfig& config) {
  if (config.inputs.empty()) throw Error(ErrorCode::InvalidConfig, "no input files given");
  if (config.window < 2) {
    throw Error(ErrorCode::InvalidConfig,
                "window must be at least 2, got " + std::to_string(config.window));
  }
  if (!config.assets.empty() && config.assets.size() < 2) {
    throw Error(ErrorCode::InvalidConfig, "select at least two assets");
  }
  if (config.format != OutputFormat::Csv && config.format != OutputFormat::Json) {
    throw Error(ErrorCode::InvalidConfig, "unknown output format");
  }
  if (config.max_scale && !(*config.max_scale >= 0.0)) {
    throw Error(ErrorCode::InvalidConfig, "max scale must be nonnegative");
  }
}

namespace {

struct InputFile {
  fs::path path;
  std::vector<std::string> header;
  std::vector<csv::Record> rows;
  std::unordered_map<std::string, std::size_t> row_of_timestamp;
};

InputFile load(const fs::path& path) {
  if (!fs::exists(path)) throw Error(ErrorCode::FileNotFound, path.string());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());

  InputFile file;
  file.path = path;
  std::vector<csv::Record> records;
  try {
    records = csv::read(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
  if (records.empty()) throw Error(ErrorCode::ParseError, path.string() + ": line 1: empty file");
  file.header = std::move(records.front().fields);
  if (file.header.size() < 2) {
    throw Error(ErrorCode::ParseError,
                path.string() + ": line 1: header needs a date column and at least one asset");
  }
  for (std::size_t i = 1; i < records.size(); ++i) {
    auto& rec = records[i];
    if (rec.fields.size() != file.header.size()) {
      throw Error(ErrorCode::ParseError, path.string() + ": line " + std::to_string(rec.line) +
                                             ": expected " + std::to_string(file.header.size()) +
                                             " fields, found " + std::to_string(rec.fields.size()));
    }
    auto [it, inserted] = file.row_of_timestamp.emplace(rec.fields[0], file.rows.size());
    if (!inserted) {
      throw Error(ErrorCode::ParseError, path.string() + ": line " + std::to_string(rec.line) +
                                             ": duplicate timestamp " + rec.fields[0]);
    }
    file.rows.push_back(std::move(rec));
  }
  return file;
}

struct ColumnRef {
  std::size_t file;
  std::size_t column;
};

}  // namespace

PriceTable ingest(const RunConfig& config, IngestReport* report) {
  validate(config);
  std::vector<InputFile> files;
  for (const auto& path : config.inputs) files.push_back(load(path));

  std::map<std::string, ColumnRef> columns;
  std::vector<std::string> all_assets;
  for (std::size_t f = 0; f < files.size(); ++f) {
    for (std::size_t c = 1; c < files[f].header.size(); ++c) {
      const std::string& name = files[f].header[c];
      if (!columns.emplace(name, ColumnRef{f, c}).second) {
        throw Error(ErrorCode::ParseError, files[f].path.string() + ": line 1: asset '" + name +
                                               "' appears in more than one column");
      }
      all_assets.push_back(name);
    }
  }

  const std::vector<std::string>& selected = config.assets.empty() ? all_assets : config.assets;
  if (selected.size() < 2) {
    throw Error(ErrorCode::InvalidConfig, "at least two assets are required, inputs provide " +
                                              std::to_string(selected.size()));
  }
  std::vector<ColumnRef> refs;
  std::unordered_set<std::string> seen;
  for (const auto& name : selected) {
    auto it = columns.find(name);
    if (it == columns.end()) throw Error(ErrorCode::InvalidConfig, "unknown asset '" + name + "'");
    if (!seen.insert(name).second) {
      throw Error(ErrorCode::InvalidConfig, "asset '" + name + "' selected twice");
    }
    refs.push_back(it->second);
  }

  const std::size_t base = std::min_element(refs.begin(), refs.end(), [](auto a, auto b) {
                             return a.file < b.file;
                           })->file;

  std::vector<std::string> timestamps;
  std::vector<double> values;
  std::size_t dropped = 0;
  for (const auto& rec : files[base].rows) {
    const std::string& stamp = rec.fields[0];
    std::vector<double> row;
    row.reserve(refs.size());
    for (const auto& ref : refs) {
      const InputFile& file = files[ref.file];
      auto it = file.row_of_timestamp.find(stamp);
      if (it == file.row_of_timestamp.end()) break;
      auto value = csv::parse_double(file.rows[it->second].fields[ref.column]);
      if (!value || !std::isfinite(*value)) break;
      row.push_back(*value);
    }
    if (row.size() != refs.size()) {
      ++dropped;
      continue;
    }
    timestamps.push_back(stamp);
    values.insert(values.end(), row.begin(), row.end());
  }
  if (dropped > 0) {
    spdlog::warn("dropped {} of {} rows with missing, non-numeric or unmatched values", dropped,
                 files[base].rows.size());
  }
  if (report) *report = {files[base].rows.size(), dropped};

  if (timestamps.size() < config.window + 1) {
    throw Error(ErrorCode::TooFewCommonRows,
                std::to_string(timestamps.size()) + " common rows, window " +
                    std::to_string(config.window) + " needs at least " +
                    std::to_string(config.window + 1));
  }

  PriceTable table;
  table.labels = selected;
  table.values = RowMatrix(timestamps.size(), refs.size());
  for (std::size_t r = 0; r < timestamps.size(); ++r) {
    for (std::size_t c = 0; c < refs.size(); ++c) {
      const double v = values[r * refs.size() + c];
      if (!(v > 0.0)) {
        throw Error(ErrorCode::NonPositivePrice, "row " + timestamps[r] + ", asset " +
                                                     selected[c] + ": " + csv::format_double(v));
      }
      table.values(r, c) = v;
    }
  }
  table.timestamps = std::move(timestamps);
  return table;
}

RowMatrix normalize_prices(const PriceTable& prices) {
  RowMatrix out(prices.steps(), prices.assets());
  for (std::size_t c = 0; c < prices.assets(); ++c) {
    double lo = INFINITY, hi = -INFINITY;
    for (std::size_t r = 0; r < prices.steps(); ++r) {
      lo = std::min(lo, prices.values(r, c));
      hi = std::max(hi, prices.values(r, c));
    }
    for (std::size_t r = 0; r < prices.steps(); ++r) {
      out(r, c) = hi > lo ? (prices.values(r, c) - lo) / (hi - lo) : 0.0;
    }
  }
  return out;
}

RunResult run(const RunConfig& config) {
  RunResult result;
  result.prices = ingest(config);
  result.returns = log_returns(result.prices);
  const auto windows = sliding_windows(result.returns, config.window);
  spdlog::debug("{} assets, {} price rows, {} windows of length {}", result.prices.assets(),
               result.prices.steps(), windows.size(), config.window);
  result.series = compute_norm_series(windows, NormOptions{config.max_scale, config.threads});
  result.series.labels = result.prices.labels;
  emit(result, config);
  return result;
}

std::vector<std::string> window_timestamps(const ReturnMatrix& returns, const NormSeries& series) {
  std::vector<std::string> out;
  out.reserve(series.windows.size());
  for (const auto& w : series.windows) {
    out.push_back(w.t < returns.timestamps.size() ? returns.timestamps[w.t] : std::string{});
  }
  return out;
}

std::string format_csv(const NormSeries& series, const std::vector<std::string>& timestamps) {
  std::string out = "t,timestamp,l0,l1,c1\n";
  for (std::size_t i = 0; i < series.windows.size(); ++i) {
    const auto& w = series.windows[i];
    out += std::to_string(w.t);
    out += ',';
    out += csv::quote(i < timestamps.size() ? timestamps[i] : std::string{});
    out += ',';
    out += csv::format_double(w.l0);
    out += ',';
    out += csv::format_double(w.l1);
    out += ',';
    if (w.c1) out += csv::format_double(*w.c1);
    out += '\n';
  }
  return out;
}

std::string format_json(const NormSeries& series, const std::vector<std::string>& timestamps) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < series.windows.size(); ++i) {
    const auto& w = series.windows[i];
    nlohmann::ordered_json row;
    row["t"] = w.t;
    row["timestamp"] = i < timestamps.size() ? timestamps[i] : std::string{};
    row["l0"] = w.l0;
    row["l1"] = w.l1;
    row["c1"] = w.c1 ? nlohmann::ordered_json(*w.c1) : nlohmann::ordered_json(nullptr);
    rows.push_back(std::move(row));
  }
  return rows.dump(2) + "\n";
}

ParsedNorms parse_norm_csv(const std::string& text) {
  std::istringstream in(text);
  const auto records = csv::read(in);
  const std::vector<std::string> header{"t", "timestamp", "l0", "l1", "c1"};
  if (records.empty() || records.front().fields != header) {
    throw Error(ErrorCode::ParseError, "line 1: expected header t,timestamp,l0,l1,c1");
  }
  ParsedNorms parsed;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& f = records[i].fields;
    auto fail = [&] {
      return Error(ErrorCode::ParseError, "line " + std::to_string(records[i].line) +
                                              ": malformed norm record");
    };
    if (f.size() != header.size()) throw fail();
    WindowNorms w;
    auto t = csv::parse_double(f[0]);
    auto l0 = csv::parse_double(f[2]);
    auto l1 = csv::parse_double(f[3]);
    if (!t || !l0 || !l1 || *t < 0) throw fail();
    w.t = static_cast<std::size_t>(*t);
    w.l0 = *l0;
    w.l1 = *l1;
    if (!f[4].empty()) {
      auto c1 = csv::parse_double(f[4]);
      if (!c1) throw fail();
      w.c1 = *c1;
    }
    parsed.series.windows.push_back(w);
    parsed.timestamps.push_back(f[1]);
  }
  return parsed;
}

ParsedNorms parse_norm_json(const std::string& text) {
  ParsedNorms parsed;
  try {
    for (const auto& row : nlohmann::json::parse(text)) {
      WindowNorms w;
      w.t = row.at("t").get<std::size_t>();
      w.l0 = row.at("l0").get<double>();
      w.l1 = row.at("l1").get<double>();
      if (!row.at("c1").is_null()) w.c1 = row.at("c1").get<double>();
      parsed.series.windows.push_back(w);
      parsed.timestamps.push_back(row.at("timestamp").get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return parsed;
}

std::string format_normalized_csv(const PriceTable& prices) {
  const RowMatrix normalized = normalize_prices(prices);
  std::string out = "date";
  for (const auto& label : prices.labels) out += ',' + csv::quote(label);
  out += '\n';
  for (std::size_t r = 0; r < prices.steps(); ++r) {
    out += csv::quote(prices.timestamps[r]);
    for (std::size_t c = 0; c < prices.assets(); ++c) {
      out += ',';
      out += csv::format_double(normalized(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string format_diagrams_csv(const std::vector<WindowCloud>& windows,
                                const std::vector<WindowDiagrams>& diagrams,
                                const std::vector<std::string>& timestamps) {
  std::string out = "t,timestamp,dim,birth,death\n";
  for (std::size_t i = 0; i < windows.size(); ++i) {
    const std::string prefix = std::to_string(windows[i].window_start) + ',' +
                               csv::quote(i < timestamps.size() ? timestamps[i] : "") + ',';
    for (const auto* diagram : {&diagrams[i].h0, &diagrams[i].h1}) {
      for (const auto& p : diagram->pairs) {
        out += prefix + std::to_string(p.dim) + ',' + csv::format_double(p.birth) + ',' +
               csv::format_double(p.death) + '\n';
      }
    }
  }
  return out;
}

void write_output(const fs::path& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
    std::cout.flush();
    if (!std::cout) throw Error(ErrorCode::IoError, "failed writing to stdout");
    return;
  }
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.close();
    if (!out) throw Error(ErrorCode::IoError, "failed writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::IoError, "cannot move output into " + path.string());
  }
}

void emit(const RunResult& result, const RunConfig& config) {
  if (result.series.windows.empty()) throw Error(ErrorCode::InvalidConfig, "empty norm series");
  const auto stamps = window_timestamps(result.returns, result.series);
  write_output(config.out, config.format == OutputFormat::Json
                               ? format_json(result.series, stamps)
                               : format_csv(result.series, stamps));
  if (config.normalized_out) {
    write_output(*config.normalized_out, format_normalized_csv(result.prices));
  }
}

}  // namespace topostab
