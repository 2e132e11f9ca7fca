#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "topostab/persistence.hpp"

namespace topostab {

// f_{b,d}: slope +1 on (b, (b+d)/2], slope -1 on ((b+d)/2, d], zero elsewhere.
double tent(double birth, double death, double x);

struct Breakpoint {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Breakpoint&) const = default;
};

// One landscape level: breakpoints with ascending x, zero at both ends, linear in between.
using LandscapeLevel = std::vector<Breakpoint>;

// Persistence landscape with exact piecewise-linear levels. levels()[0] is the
// first (pointwise largest) level; levels past the stored ones are identically zero.
class Landscape {
 public:
  Landscape() = default;
  explicit Landscape(std::vector<LandscapeLevel> levels) : levels_(std::move(levels)) {}

  const std::vector<LandscapeLevel>& levels() const noexcept { return levels_; }
  std::size_t level_count() const noexcept { return levels_.size(); }

  // k is 1-based.
  double eval(std::size_t k, double x) const;

 private:
  std::vector<LandscapeLevel> levels_;
};

// Essential pairs and pairs with death <= birth are ignored.
Landscape build_landscape(std::span<const PersistencePair> pairs);
Landscape build_landscape(const PersistenceDiagram& diagram);

// ||lambda_k||_p with Lebesgue measure, integrated exactly segment by segment. p >= 1.
double lp_norm_level(const Landscape& landscape, std::size_t k, double p);

// Sum over all levels of ||lambda_k||_p.
double full_lp_norm(const Landscape& landscape, double p);

}  // namespace topostab
