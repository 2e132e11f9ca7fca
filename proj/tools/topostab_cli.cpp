// topostab: L0/L1/C1 topological stability indicators for multi-asset price series.

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <iostream>
#include <string>

#include "topostab/csv.hpp"
#include "topostab/error.hpp"
#include "topostab/pipeline.hpp"

namespace {

using topostab::Error;
using topostab::ErrorCode;

std::optional<double> parse_max_scale(const std::string& text) {
  if (text == "auto") return std::nullopt;
  auto value = topostab::csv::parse_double(text);
  if (!value || !(*value >= 0.0)) {
    throw Error(ErrorCode::InvalidConfig, "--max-scale expects a nonnegative number or 'auto'");
  }
  return value;
}

void add_data_options(CLI::App& cmd, topostab::RunConfig& config, std::string& max_scale) {
  cmd.add_option("-i,--input", config.inputs, "CSV files: date column then asset columns")
      ->required();
  cmd.add_option("-w,--window", config.window, "Window length T in return rows")
      ->check(CLI::Range(2, 1 << 20));
  cmd.add_option("-a,--assets", config.assets, "Asset columns to use (default: all)");
  cmd.add_option("--max-scale", max_scale, "Rips cutoff: a number or 'auto' (window diameter)");
  cmd.add_option("-o,--out", config.out, "Output path ('-' for stdout)");
  cmd.add_option("-j,--threads", config.threads, "Worker threads (0 = all cores)");
}

}  // namespace

int main(int argc, char** argv) {
  auto logger = spdlog::stderr_color_mt("topostab");
  spdlog::set_default_logger(logger);

  CLI::App app{"Topological market-stability indicators from price series"};
  app.require_subcommand(1);
  std::string log_level = "warn";
  app.add_option("--log-level", log_level, "trace, debug, info, warn, error, off")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "critical", "off"}));

  topostab::RunConfig config;
  config.window = 30;
  std::string max_scale = "auto";
  std::string format = "csv";
  std::string normalized_out;

  auto* analyze = app.add_subcommand("analyze", "Compute the L0, L1, C1 norm series");
  add_data_options(*analyze, config, max_scale);
  analyze->add_option("-f,--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  analyze->add_option("--normalized-out", normalized_out,
                      "Also write min-max normalized prices to this path");

  auto* diagram = app.add_subcommand("diagram", "Dump per-window H0/H1 persistence pairs");
  add_data_options(*diagram, config, max_scale);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : 1;
  }
  spdlog::set_level(spdlog::level::from_str(log_level));

  try {
    config.max_scale = parse_max_scale(max_scale);
    config.format = format == "json" ? topostab::OutputFormat::Json : topostab::OutputFormat::Csv;
    if (!normalized_out.empty()) config.normalized_out = normalized_out;
    topostab::validate(config);

    if (*analyze) {
      topostab::run(config);
    } else {
      const auto prices = topostab::ingest(config);
      const auto returns = topostab::log_returns(prices);
      const auto windows = topostab::sliding_windows(returns, config.window);
      std::vector<topostab::WindowDiagrams> diagrams;
      diagrams.reserve(windows.size());
      for (const auto& w : windows) {
        diagrams.push_back(topostab::window_diagrams(w, {config.max_scale, 1}));
      }
      std::vector<std::string> stamps;
      for (const auto& w : windows) stamps.push_back(returns.timestamps[w.window_start]);
      topostab::write_output(config.out, topostab::format_diagrams_csv(windows, diagrams, stamps));
    }
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
    return topostab::exit_code_for(e.code());
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 2;
  }
  return 0;
}
