#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "topostab/geometry.hpp"
#include "topostab/persistence.hpp"

namespace topostab {

struct WindowNorms {
  std::size_t t = 0;
  double l0 = 0.0;
  double l1 = 0.0;
  std::optional<double> c1;  // absent for the first window

  bool operator==(const WindowNorms&) const = default;
};

struct NormSeries {
  std::vector<WindowNorms> windows;
  std::vector<std::string> labels;
  std::size_t window_len = 0;
};

struct WindowDiagrams {
  PersistenceDiagram h0;
  PersistenceDiagram h1;
};

struct NormOptions {
  // Rips cutoff; unset means the window's diameter, which keeps every simplex.
  std::optional<double> max_scale;
  // Worker threads for the per-window fan-out; 0 picks the hardware concurrency.
  unsigned threads = 1;
};

// Area under the first landscape level of the finite H1 pairs.
double l1_indicator(const PersistenceDiagram& h1);

// Area under the second landscape level of the finite H0 pairs.
double l0_indicator(const PersistenceDiagram& h0);

// Lag-one corrected L1: l1_now + l1_now - l1_prev.
double c1_indicator(double l1_now, double l1_prev);

// Distance matrix, dimension-2 Rips filtration and both diagrams of one window.
WindowDiagrams window_diagrams(const WindowCloud& cloud, const NormOptions& options = {});

// Per-window L0/L1 plus the C1 lag join. Output is ordered by window start and
// does not depend on the thread count.
NormSeries compute_norm_series(const std::vector<WindowCloud>& windows,
                               const NormOptions& options = {});

}  // namespace topostab
