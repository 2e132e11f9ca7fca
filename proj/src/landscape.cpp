#include "topostab/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "topostab/error.hpp"

namespace topostab {

double tent(double birth, double death, double x) {
  if (x <= birth || x > death) return 0.0;
  const double mid = 0.5 * (birth + death);
  return x <= mid ? x - birth : death - x;
}

double Landscape::eval(std::size_t k, double x) const {
  if (k == 0 || k > levels_.size()) return 0.0;
  const LandscapeLevel& level = levels_[k - 1];
  if (level.empty() || x <= level.front().x || x >= level.back().x) return 0.0;
  auto hi = std::upper_bound(level.begin(), level.end(), x,
                             [](double value, const Breakpoint& b) { return value < b.x; });
  auto lo = hi - 1;
  if (hi->x == lo->x) return std::max(lo->y, hi->y);
  const double w = (x - lo->x) / (hi->x - lo->x);
  return lo->y + w * (hi->y - lo->y);
}

namespace {

// Drops leading and trailing zeros (keeping one at each end) and interior zeros
// flanked by zeros.
LandscapeLevel trim(const LandscapeLevel& raw) {
  std::size_t first = 0;
  while (first + 1 < raw.size() && raw[first + 1].y == 0.0) ++first;
  std::size_t last = raw.size() - 1;
  while (last > first && raw[last - 1].y == 0.0) --last;
  LandscapeLevel out;
  for (std::size_t i = first; i <= last; ++i) {
    const bool interior = i > first && i < last;
    if (interior && raw[i].y == 0.0 && raw[i - 1].y == 0.0 && raw[i + 1].y == 0.0) continue;
    out.push_back(raw[i]);
  }
  return out;
}

}  // namespace

Landscape build_landscape(std::span<const PersistencePair> pairs) {
  struct Bar {
    double birth, death;
  };
  std::vector<Bar> bars;
  for (const auto& p : pairs) {
    if (p.essential() || !(p.death > p.birth)) continue;
    bars.push_back({p.birth, p.death});
  }
  if (bars.empty()) return Landscape{};

  // Between consecutive candidates each tent is linear and the tents' relative order
  // is fixed: rising and falling edges meet only at (b_i + d_j) / 2.
  std::vector<double> xs;
  xs.reserve(bars.size() * (bars.size() + 2));
  for (const Bar& a : bars) {
    xs.push_back(a.birth);
    xs.push_back(a.death);
    for (const Bar& b : bars) {
      const double cross = 0.5 * (a.birth + b.death);
      if (cross > a.birth && cross < b.death) xs.push_back(cross);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<std::vector<double>> values_at(xs.size());
  std::size_t depth = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    auto& values = values_at[i];
    for (const Bar& b : bars) {
      const double v = tent(b.birth, b.death, xs[i]);
      if (v > 0.0) values.push_back(v);
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    depth = std::max(depth, values.size());
  }

  std::vector<LandscapeLevel> levels;
  levels.reserve(depth);
  for (std::size_t k = 0; k < depth; ++k) {
    LandscapeLevel raw;
    raw.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const auto& values = values_at[i];
      raw.push_back({xs[i], k < values.size() ? values[k] : 0.0});
    }
    levels.push_back(trim(raw));
  }
  return Landscape(std::move(levels));
}

Landscape build_landscape(const PersistenceDiagram& diagram) {
  return build_landscape(std::span<const PersistencePair>(diagram.pairs));
}

double lp_norm_level(const Landscape& landscape, std::size_t k, double p) {
  if (!(p >= 1.0)) throw Error(ErrorCode::InvalidConfig, "Lp norm requires p >= 1");
  if (k == 0 || k > landscape.level_count()) return 0.0;
  const LandscapeLevel& level = landscape.levels()[k - 1];
  double integral = 0.0;
  for (std::size_t i = 0; i + 1 < level.size(); ++i) {
    const double width = level[i + 1].x - level[i].x;
    const double y0 = level[i].y;
    const double y1 = level[i + 1].y;
    if (p == 1.0) {
      integral += 0.5 * width * (y0 + y1);
    } else if (std::abs(y1 - y0) <= 1e-15 * std::max(y0, y1)) {
      integral += width * std::pow(0.5 * (y0 + y1), p);
    } else {
      integral += width * (std::pow(y1, p + 1) - std::pow(y0, p + 1)) / ((p + 1) * (y1 - y0));
    }
  }
  return p == 1.0 ? integral : std::pow(integral, 1.0 / p);
}

double full_lp_norm(const Landscape& landscape, double p) {
  double total = 0.0;
  for (std::size_t k = 1; k <= landscape.level_count(); ++k) total += lp_norm_level(landscape, k, p);
  return total;
}

}  // namespace topostab
