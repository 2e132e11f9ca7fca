#include "topostab/filtration.hpp"

#include <algorithm>
#include <string>

#include "topostab/error.hpp"

namespace topostab {

bool filtration_less(const Simplex& a, const Simplex& b) {
  if (a.appearance != b.appearance) return a.appearance < b.appearance;
  if (a.dim != b.dim) return a.dim < b.dim;
  return std::lexicographical_compare(a.vertices().begin(), a.vertices().end(),
                                      b.vertices().begin(), b.vertices().end());
}

// Combinatorial number system rank of a < b < c.
std::size_t Filtration::triangle_key(VertexId a, VertexId b, VertexId c) {
  const std::size_t cc = c, bb = b;
  return cc * (cc - 1) * (cc - 2) / 6 + bb * (bb - 1) / 2 + a;
}

std::optional<std::size_t> Filtration::position_of(std::span<const VertexId> v) const {
  std::size_t pos = npos;
  switch (v.size()) {
    case 1:
      if (v[0] < vertex_count_) pos = v[0];  // vertices all appear at 0 in index order
      break;
    case 2:
      if (v[0] < v[1] && v[1] < vertex_count_) pos = edge_pos_[edge_key(v[0], v[1])];
      break;
    case 3:
      if (max_dim_ >= 2 && v[0] < v[1] && v[1] < v[2] && v[2] < vertex_count_)
        pos = triangle_pos_[triangle_key(v[0], v[1], v[2])];
      break;
    default:
      break;
  }
  if (pos == npos) return std::nullopt;
  return pos;
}

std::size_t Filtration::count_of_dim(int dim) const {
  return static_cast<std::size_t>(std::count_if(
      simplices_.begin(), simplices_.end(), [dim](const Simplex& s) { return s.dim == dim; }));
}

Filtration build_rips(const DistanceMatrix& dist, int max_dim, double max_scale) {
  const std::size_t n = dist.size();
  if (n == 0) throw Error(ErrorCode::EmptyCloud, "cannot build a filtration on zero points");
  if (max_dim != 1 && max_dim != 2) {
    throw Error(ErrorCode::InvalidConfig,
                "max_dim must be 1 or 2, got " + std::to_string(max_dim));
  }

  Filtration f;
  f.vertex_count_ = n;
  f.max_dim_ = max_dim;
  f.max_scale_ = max_scale;

  auto& simplices = f.simplices_;
  for (std::size_t v = 0; v < n; ++v) {
    Simplex s;
    s.vertex_storage = {static_cast<VertexId>(v), 0, 0};
    s.dim = 0;
    s.appearance = 0.0;
    simplices.push_back(s);
  }
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      const double d = dist(a, b);
      if (d > max_scale) continue;
      simplices.push_back(Simplex{{a, b, 0}, 1, d});
    }
  }
  if (max_dim == 2) {
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) {
        const double ab = dist(a, b);
        if (ab > max_scale) continue;
        for (VertexId c = b + 1; c < n; ++c) {
          const double diameter = std::max({ab, dist(a, c), dist(b, c)});
          if (diameter > max_scale) continue;
          simplices.push_back(Simplex{{a, b, c}, 2, diameter});
        }
      }
    }
  }

  std::sort(simplices.begin(), simplices.end(), filtration_less);

  f.edge_pos_.assign(n * n, Filtration::npos);
  if (max_dim == 2) f.triangle_pos_.assign(n * (n - 1) * (n - 2) / 6, Filtration::npos);
  for (std::size_t pos = 0; pos < simplices.size(); ++pos) {
    const Simplex& s = simplices[pos];
    const auto& v = s.vertex_storage;
    if (s.dim == 1) {
      f.edge_pos_[f.edge_key(v[0], v[1])] = pos;
    } else if (s.dim == 2) {
      f.triangle_pos_[Filtration::triangle_key(v[0], v[1], v[2])] = pos;
    }
  }
  return f;
}

BoundaryColumn boundary(const Simplex& simplex, const Filtration& filtration) {
  BoundaryColumn column;
  if (simplex.dim == 0) return column;
  const auto v = simplex.vertices();
  column.reserve(v.size());
  std::array<VertexId, 2> face{};
  for (std::size_t skip = 0; skip < v.size(); ++skip) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i != skip) face[k++] = v[i];
    }
    auto pos = filtration.position_of(std::span<const VertexId>(face.data(), k));
    if (!pos) {
      throw Error(ErrorCode::MissingFace, "face of a " + std::to_string(simplex.dim) +
                                              "-simplex is absent from the filtration");
    }
    column.push_back(*pos);
  }
  std::sort(column.begin(), column.end());
  return column;
}

BoundaryColumn boundary(const Filtration& filtration, std::size_t pos) {
  return boundary(filtration[pos], filtration);
}

}  // namespace topostab
