#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "topostab/error.hpp"
#include "topostab/filtration.hpp"

using namespace topostab;

namespace {

Filtration rips_of(const RowMatrix& pts, int max_dim = 2, double scale = INFINITY) {
  return build_rips(distance_matrix(pts), max_dim, scale);
}

std::size_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("three-point example filtration") {
  const auto f = rips_of(oracle::points({{0, 0}, {1, 1}, {1, 0}}));
  REQUIRE(f.size() == 7);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(f[i].dim == 0);
    CHECK(f[i].appearance == 0.0);
  }
  CHECK(f[3].dim == 1);
  CHECK(f[3].appearance == 1.0);
  CHECK(f[4].dim == 1);
  CHECK(f[4].appearance == 1.0);
  CHECK(f[5].dim == 1);
  CHECK(f[5].appearance == doctest::Approx(std::sqrt(2.0)));
  CHECK(f[6].dim == 2);
  CHECK(f[6].appearance == f[5].appearance);
}

TEST_CASE("scale cutoff drops long edges") {
  const auto f = rips_of(oracle::points({{0, 0}, {3, 4}}), 2, 3.0);
  CHECK(f.size() == 2);
  CHECK(f.count_of_dim(1) == 0);
}

TEST_CASE("unit square filtration matches exhaustive enumeration") {
  const auto pts = oracle::points({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const auto f = rips_of(pts);
  CHECK(f.count_of_dim(0) == 4);
  CHECK(f.count_of_dim(1) == 6);
  CHECK(f.count_of_dim(2) == 4);

  // Every subset of size 1..3 with its diameter, enumerated directly.
  std::multiset<std::pair<int, double>> expected;
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<int> v;
    for (int i = 0; i < 4; ++i)
      if (mask & (1u << i)) v.push_back(i);
    if (v.size() > 3) continue;
    double diam = 0.0;
    for (int a : v)
      for (int b : v) diam = std::max(diam, oracle::euclidean(pts.row(a), pts.row(b)));
    expected.emplace(static_cast<int>(v.size()) - 1, diam);
  }
  std::multiset<std::pair<int, double>> actual;
  for (const auto& s : f.simplices()) actual.emplace(s.dim, s.appearance);
  CHECK(actual == expected);
  for (const auto& s : f.simplices())
    if (s.dim == 2) CHECK(s.appearance == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("boundary columns") {
  const auto f = rips_of(oracle::points({{0, 0}, {1, 1}, {1, 0}}));
  // Vertex 0 = (0,0), vertex 2 = (1,0).
  const std::array<VertexId, 2> edge{0, 2};
  const auto pos = f.position_of(edge);
  REQUIRE(pos);
  CHECK(boundary(f, *pos) == BoundaryColumn{0, 2});
  CHECK(boundary(f, 1).empty());

  const std::array<VertexId, 3> tri{0, 1, 2};
  const auto tpos = f.position_of(tri);
  REQUIRE(tpos);
  const auto faces = boundary(f, *tpos);
  CHECK(faces.size() == 3);
  std::map<std::size_t, int> parity;
  for (std::size_t e : faces)
    for (std::size_t v : boundary(f, e)) parity[v] ^= 1;
  for (auto [v, bit] : parity) CHECK(bit == 0);
}

TEST_CASE("missing face is reported") {
  const auto f = rips_of(oracle::points({{0, 0}, {3, 4}, {6, 0}}), 2, 5.5);
  Simplex tri{{0, 1, 2}, 2, 6.0};
  CHECK_THROWS_AS(boundary(tri, f), Error);
  try {
    boundary(tri, f);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingFace);
  }
}

TEST_CASE("invalid build arguments") {
  CHECK_THROWS_AS(build_rips(DistanceMatrix(0), 2), Error);
  CHECK_THROWS_AS(build_rips(DistanceMatrix(3), 3), Error);
}

TEST_CASE("random filtrations are ordered, face-closed and complete") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 10;
    const auto pts = oracle::random_cloud(rng, n, 1 + trial % 4);
    const auto f = rips_of(pts);
    CHECK(f.count_of_dim(0) == n);
    CHECK(f.count_of_dim(1) == choose(n, 2));
    CHECK(f.count_of_dim(2) == choose(n, 3));
    CHECK(std::is_sorted(f.simplices().begin(), f.simplices().end(), filtration_less));
    for (std::size_t p = 0; p < f.size(); ++p) {
      const auto faces = boundary(f, p);
      CHECK(faces.size() == (f[p].dim == 0 ? 0u : static_cast<std::size_t>(f[p].dim + 1)));
      for (std::size_t q : faces) {
        CHECK(q < p);
        CHECK(f[q].appearance <= f[p].appearance);
      }
      // boundary of boundary vanishes mod 2
      std::map<std::size_t, int> parity;
      for (std::size_t q : faces)
        for (std::size_t r : boundary(f, q)) parity[r] ^= 1;
      for (auto [r, bit] : parity) CHECK(bit == 0);
      CHECK(f.position_of(f[p].vertices()) == p);
    }
  }
}

TEST_CASE("truncated random filtrations stay face-closed") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto pts = oracle::random_cloud(rng, 10, 2);
    const auto f = rips_of(pts, 2, 0.8);
    for (std::size_t p = 0; p < f.size(); ++p) {
      CHECK(f[p].appearance <= 0.8);
      for (std::size_t q : boundary(f, p)) CHECK(q < p);
    }
  }
}
