#include "topostab/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "topostab/error.hpp"

namespace topostab {

double DistanceMatrix::max_distance() const {
  double best = 0.0;
  for (double d : dist_) best = std::max(best, d);
  return best;
}

ReturnMatrix log_returns(const PriceTable& prices) {
  const std::size_t rows = prices.steps();
  const std::size_t cols = prices.assets();
  if (rows < 2) {
    throw Error(ErrorCode::TooFewRows,
                "log returns need at least 2 price rows, got " + std::to_string(rows));
  }
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      // Negated test so that NaN is rejected as well.
      if (!(prices.values(r, c) > 0.0)) {
        std::string asset = c < prices.labels.size() ? prices.labels[c] : std::to_string(c);
        throw Error(ErrorCode::NonPositivePrice,
                    "row " + std::to_string(r) + ", asset " + asset + " has non-positive price");
      }
    }
  }

  ReturnMatrix out;
  out.returns = RowMatrix(rows - 1, cols);
  out.labels = prices.labels;
  for (std::size_t r = 0; r + 1 < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      out.returns(r, c) = std::log(prices.values(r + 1, c) / prices.values(r, c));
    }
  }
  if (prices.timestamps.size() == rows) {
    out.timestamps.assign(prices.timestamps.begin() + 1, prices.timestamps.end());
  }
  return out;
}

WindowCloud window_at(const ReturnMatrix& returns, std::size_t start, std::size_t window_len) {
  WindowCloud cloud;
  cloud.window_start = start;
  cloud.points = RowMatrix(window_len, returns.assets());
  for (std::size_t a = 0; a < window_len; ++a) {
    auto src = returns.returns.row(start + a);
    std::copy(src.begin(), src.end(), cloud.points.row(a).begin());
  }
  return cloud;
}

std::vector<WindowCloud> sliding_windows(const ReturnMatrix& returns, std::size_t window_len) {
  if (window_len < 2) {
    throw Error(ErrorCode::WindowTooShort,
                "window length must be at least 2, got " + std::to_string(window_len));
  }
  if (window_len > returns.steps()) {
    throw Error(ErrorCode::WindowTooLong, "window length " + std::to_string(window_len) +
                                              " exceeds " + std::to_string(returns.steps()) +
                                              " return rows");
  }
  std::vector<WindowCloud> windows;
  const std::size_t count = returns.steps() - window_len + 1;
  windows.reserve(count);
  for (std::size_t t = 0; t < count; ++t) windows.push_back(window_at(returns, t, window_len));
  return windows;
}

DistanceMatrix distance_matrix(const RowMatrix& points) {
  const std::size_t n = points.rows();
  if (n == 0) throw Error(ErrorCode::EmptyCloud, "point cloud has no points");
  DistanceMatrix dist(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto p = points.row(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      auto q = points.row(j);
      double sum = 0.0;
      for (std::size_t k = 0; k < p.size(); ++k) {
        const double diff = p[k] - q[k];
        sum += diff * diff;
      }
      dist.set(i, j, std::sqrt(sum));
    }
  }
  return dist;
}

DistanceMatrix distance_matrix(const WindowCloud& cloud) { return distance_matrix(cloud.points); }

}  // namespace topostab
