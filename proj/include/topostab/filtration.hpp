#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "topostab/geometry.hpp"

namespace topostab {

using VertexId = std::uint32_t;

// A vertex, edge or triangle of a Rips complex with the scale at which it appears.
struct Simplex {
  std::array<VertexId, 3> vertex_storage{};  // strictly increasing in the first dim+1 slots
  int dim = 0;
  double appearance = 0.0;

  std::span<const VertexId> vertices() const {
    return {vertex_storage.data(), static_cast<std::size_t>(dim + 1)};
  }
};

// Filtration order: appearance, then dimension, then vertices lexicographically.
bool filtration_less(const Simplex& a, const Simplex& b);

using BoundaryColumn = std::vector<std::size_t>;

class Filtration {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
  const Simplex& operator[](std::size_t pos) const { return simplices_[pos]; }
  std::size_t size() const noexcept { return simplices_.size(); }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  int max_dim() const noexcept { return max_dim_; }
  double max_scale() const noexcept { return max_scale_; }

  // Position of the simplex spanned by the given sorted vertices, if present.
  std::optional<std::size_t> position_of(std::span<const VertexId> vertices) const;

  std::size_t count_of_dim(int dim) const;

 private:
  friend Filtration build_rips(const DistanceMatrix&, int, double);

  std::size_t edge_key(VertexId a, VertexId b) const { return std::size_t{a} * vertex_count_ + b; }
  static std::size_t triangle_key(VertexId a, VertexId b, VertexId c);

  std::vector<Simplex> simplices_;
  std::size_t vertex_count_ = 0;
  int max_dim_ = 0;
  double max_scale_ = 0.0;
  std::vector<std::size_t> edge_pos_;
  std::vector<std::size_t> triangle_pos_;
};

// Vietoris-Rips filtration of all simplices of dimension <= max_dim (1 or 2) with
// diameter <= max_scale. An infinite max_scale keeps every simplex.
Filtration build_rips(const DistanceMatrix& dist, int max_dim,
                      double max_scale = std::numeric_limits<double>::infinity());

// Positions of the codimension-1 faces, ascending. Coefficients live in Z/2.
BoundaryColumn boundary(const Simplex& simplex, const Filtration& filtration);
BoundaryColumn boundary(const Filtration& filtration, std::size_t pos);

}  // namespace topostab
