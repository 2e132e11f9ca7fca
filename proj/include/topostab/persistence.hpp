#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "topostab/filtration.hpp"

namespace topostab {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct PersistencePair {
  double birth = 0.0;
  double death = kInfinity;
  int dim = 0;

  bool essential() const noexcept { return death == kInfinity; }
  double persistence() const noexcept { return death - birth; }
  bool operator==(const PersistencePair&) const = default;
};

struct PersistenceDiagram {
  int dim = 0;
  std::vector<PersistencePair> pairs;

  std::size_t essential_count() const;
  std::vector<PersistencePair> finite_pairs() const;
  bool operator==(const PersistenceDiagram&) const = default;
};

// Result of reducing a Z/2 boundary matrix column by column, left to right.
struct Reduction {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::vector<BoundaryColumn> columns;          // reduced columns, rows ascending
  std::vector<std::size_t> pivot_column_of_row;  // npos where the row is no column's low

  std::optional<std::size_t> low(std::size_t column) const {
    if (columns[column].empty()) return std::nullopt;
    return columns[column].back();
  }
};

// Columns hold row indices in [0, row_count); each is reduced until its lowest row
// is not the lowest row of any earlier column, or until it vanishes.
Reduction reduce_matrix(const std::vector<BoundaryColumn>& columns, std::size_t row_count);

// Zero-dimensional diagram: every merge of two components at edge length l gives
// (0, l); each surviving component gives (0, inf).
PersistenceDiagram compute_h0(const Filtration& filtration);

// One-dimensional diagram from reduction of the edge and triangle boundary matrices.
// Cycles never filled by a triangle within the filtration are reported as essential.
PersistenceDiagram compute_h1(const Filtration& filtration);

}  // namespace topostab
