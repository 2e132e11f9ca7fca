#include "topostab/norms.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "topostab/error.hpp"
#include "topostab/filtration.hpp"
#include "topostab/landscape.hpp"

namespace topostab {

double l1_indicator(const PersistenceDiagram& h1) {
  return lp_norm_level(build_landscape(h1), 1, 1.0);
}

double l0_indicator(const PersistenceDiagram& h0) {
  return lp_norm_level(build_landscape(h0), 2, 1.0);
}

double c1_indicator(double l1_now, double l1_prev) { return l1_now + l1_now - l1_prev; }

WindowDiagrams window_diagrams(const WindowCloud& cloud, const NormOptions& options) {
  const DistanceMatrix dist = distance_matrix(cloud);
  const double scale = options.max_scale.value_or(dist.max_distance());
  const Filtration filtration = build_rips(dist, 2, scale);
  return {compute_h0(filtration), compute_h1(filtration)};
}

NormSeries compute_norm_series(const std::vector<WindowCloud>& windows,
                               const NormOptions& options) {
  if (windows.empty()) throw Error(ErrorCode::InvalidConfig, "no windows to analyze");

  NormSeries series;
  series.window_len = windows.front().size();
  series.windows.resize(windows.size());
  std::vector<std::exception_ptr> failures(windows.size());

  auto work = [&](std::size_t i) {
    try {
      const WindowDiagrams d = window_diagrams(windows[i], options);
      auto& row = series.windows[i];
      row.t = windows[i].window_start;
      row.l0 = l0_indicator(d.h0);
      row.l1 = l1_indicator(d.h1);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  };

  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(windows.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < windows.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < windows.size(); i = next++) work(i);
      });
    }
  }

  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (!failures[i]) continue;
    const std::string where = "window " + std::to_string(windows[i].window_start) + ": ";
    try {
      std::rethrow_exception(failures[i]);
    } catch (const Error& e) {
      throw Error(e.code(), where + e.what());
    }
  }

  for (std::size_t i = 1; i < series.windows.size(); ++i) {
    series.windows[i].c1 = c1_indicator(series.windows[i].l1, series.windows[i - 1].l1);
  }
  return series;
}

}  // namespace topostab
