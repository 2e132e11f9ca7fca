#include "topostab/persistence.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "topostab/error.hpp"

namespace topostab {

std::size_t PersistenceDiagram::essential_count() const {
  return static_cast<std::size_t>(
      std::count_if(pairs.begin(), pairs.end(), [](const auto& p) { return p.essential(); }));
}

std::vector<PersistencePair> PersistenceDiagram::finite_pairs() const {
  std::vector<PersistencePair> out;
  std::copy_if(pairs.begin(), pairs.end(), std::back_inserter(out),
               [](const auto& p) { return !p.essential(); });
  return out;
}

namespace {

// Columns packed as fixed-width bitsets in one buffer; XOR and lowest-row lookups
// are word operations.
class BitColumns {
 public:
  BitColumns(std::size_t column_count, std::size_t row_count)
      : words_((row_count + 63) / 64), bits_(column_count * words_, 0) {}

  void set(std::size_t col, std::size_t row) {
    bits_[col * words_ + row / 64] ^= std::uint64_t{1} << (row % 64);
  }

  void add_into(std::size_t target, std::size_t source) {
    std::uint64_t* t = bits_.data() + target * words_;
    const std::uint64_t* s = bits_.data() + source * words_;
    for (std::size_t w = 0; w < words_; ++w) t[w] ^= s[w];
  }

  // Highest set row, or npos for an empty column.
  std::size_t low(std::size_t col) const {
    const std::uint64_t* c = bits_.data() + col * words_;
    for (std::size_t w = words_; w-- > 0;) {
      if (c[w] != 0) return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(c[w]));
    }
    return Reduction::npos;
  }

  BoundaryColumn rows(std::size_t col) const {
    BoundaryColumn out;
    const std::uint64_t* c = bits_.data() + col * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t word = c[w];
      while (word != 0) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
    return out;
  }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

// Reduces in place; returns for each row the column whose low it is (or npos).
std::vector<std::size_t> reduce(BitColumns& matrix, std::size_t column_count,
                                std::size_t row_count) {
  std::vector<std::size_t> pivot(row_count, Reduction::npos);
  for (std::size_t j = 0; j < column_count; ++j) {
    std::size_t low = matrix.low(j);
    while (low != Reduction::npos && pivot[low] != Reduction::npos) {
      matrix.add_into(j, pivot[low]);
      low = matrix.low(j);
    }
    if (low != Reduction::npos) pivot[low] = j;
  }
  return pivot;
}

BitColumns pack(const std::vector<BoundaryColumn>& columns, std::size_t row_count) {
  BitColumns matrix(columns.size(), row_count);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t row : columns[j]) matrix.set(j, row);
  }
  return matrix;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Attaches the larger root index under the smaller one.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Reduction reduce_matrix(const std::vector<BoundaryColumn>& columns, std::size_t row_count) {
  BitColumns matrix = pack(columns, row_count);
  Reduction result;
  result.pivot_column_of_row = reduce(matrix, columns.size(), row_count);
  result.columns.reserve(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) result.columns.push_back(matrix.rows(j));
  return result;
}

PersistenceDiagram compute_h0(const Filtration& filtration) {
  PersistenceDiagram diagram;
  diagram.dim = 0;
  UnionFind components(filtration.vertex_count());
  std::size_t alive = filtration.vertex_count();
  for (const Simplex& s : filtration.simplices()) {
    if (s.dim != 1) continue;
    if (components.unite(s.vertex_storage[0], s.vertex_storage[1])) {
      --alive;
      if (s.appearance > 0.0) diagram.pairs.push_back({0.0, s.appearance, 0});
    }
  }
  for (std::size_t i = 0; i < alive; ++i) diagram.pairs.push_back({0.0, kInfinity, 0});
  return diagram;
}

PersistenceDiagram compute_h1(const Filtration& filtration) {
  if (filtration.max_dim() < 2) {
    throw Error(ErrorCode::FiltrationDimensionTooLow,
                "one-dimensional persistence needs triangles in the filtration");
  }
  const auto& simplices = filtration.simplices();

  // Edges and triangles in filtration order; edges are re-indexed densely so the
  // triangle matrix has one row per edge.
  std::vector<std::size_t> edges;
  std::vector<std::size_t> triangles;
  std::vector<std::size_t> edge_index(simplices.size(), Reduction::npos);
  for (std::size_t pos = 0; pos < simplices.size(); ++pos) {
    if (simplices[pos].dim == 1) {
      edge_index[pos] = edges.size();
      edges.push_back(pos);
    } else if (simplices[pos].dim == 2) {
      triangles.push_back(pos);
    }
  }

  // Edge columns over vertex rows: an edge whose column vanishes closes a cycle.
  BitColumns edge_matrix(edges.size(), filtration.vertex_count());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Simplex& s = simplices[edges[e]];
    edge_matrix.set(e, s.vertex_storage[0]);
    edge_matrix.set(e, s.vertex_storage[1]);
  }
  reduce(edge_matrix, edges.size(), filtration.vertex_count());

  BitColumns triangle_matrix(triangles.size(), edges.size());
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    for (std::size_t face : boundary(filtration, triangles[t])) {
      triangle_matrix.set(t, edge_index[face]);
    }
  }
  const auto pivot = reduce(triangle_matrix, triangles.size(), edges.size());

  PersistenceDiagram diagram;
  diagram.dim = 1;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edge_matrix.low(e) != Reduction::npos) continue;  // merges components
    const double birth = simplices[edges[e]].appearance;
    if (pivot[e] == Reduction::npos) {
      diagram.pairs.push_back({birth, kInfinity, 1});
      continue;
    }
    const double death = simplices[triangles[pivot[e]]].appearance;
    if (death > birth) diagram.pairs.push_back({birth, death, 1});
  }
  return diagram;
}

}  // namespace topostab
