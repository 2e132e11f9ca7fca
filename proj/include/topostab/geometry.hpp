#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace topostab {

// Dense row-major matrix of doubles.
class RowMatrix {
 public:
  RowMatrix() = default;
  RowMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  bool operator==(const RowMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Closing prices: one row per time step, one column per asset.
struct PriceTable {
  RowMatrix values;
  std::vector<std::string> labels;
  std::vector<std::string> timestamps;

  std::size_t steps() const noexcept { return values.rows(); }
  std::size_t assets() const noexcept { return values.cols(); }
};

// Log returns; row i is ln(p[i+1] / p[i]) and carries the timestamp of raw row i+1.
struct ReturnMatrix {
  RowMatrix returns;
  std::vector<std::string> labels;
  std::vector<std::string> timestamps;

  std::size_t steps() const noexcept { return returns.rows(); }
  std::size_t assets() const noexcept { return returns.cols(); }
};

// T consecutive return vectors, rows [window_start, window_start + T).
struct WindowCloud {
  RowMatrix points;
  std::size_t window_start = 0;

  std::size_t size() const noexcept { return points.rows(); }
  std::size_t dimension() const noexcept { return points.cols(); }
};

// Symmetric matrix of pairwise Euclidean distances with a zero diagonal.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n) : n_(n), dist_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double d) {
    dist_[i * n_ + j] = d;
    dist_[j * n_ + i] = d;
  }
  double max_distance() const;

 private:
  std::size_t n_;
  std::vector<double> dist_;
};

ReturnMatrix log_returns(const PriceTable& prices);

std::vector<WindowCloud> sliding_windows(const ReturnMatrix& returns, std::size_t window_len);

// Single window starting at return row `start`; no bounds beyond the row count are implied.
WindowCloud window_at(const ReturnMatrix& returns, std::size_t start, std::size_t window_len);

DistanceMatrix distance_matrix(const WindowCloud& cloud);
DistanceMatrix distance_matrix(const RowMatrix& points);

}  // namespace topostab
