#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "topostab/error.hpp"
#include "topostab/landscape.hpp"
#include "topostab/norms.hpp"

using namespace topostab;

namespace {

PersistenceDiagram diagram(int dim, std::vector<PersistencePair> pairs) {
  return PersistenceDiagram{dim, std::move(pairs)};
}

WindowCloud cloud(RowMatrix pts, std::size_t start = 0) { return WindowCloud{std::move(pts), start}; }

std::vector<WindowCloud> random_windows(std::mt19937_64& rng, std::size_t count, std::size_t len,
                                        std::size_t dim) {
  std::vector<WindowCloud> out;
  for (std::size_t t = 0; t < count; ++t) out.push_back(cloud(oracle::random_cloud(rng, len, dim), t));
  return out;
}

double oracle_area(const std::vector<PersistencePair>& pairs, std::size_t k) {
  return oracle::integrate_over_tents([&](double x) { return oracle::kmax(pairs, k, x); }, pairs);
}

}  // namespace

TEST_CASE("l1 indicator") {
  CHECK(l1_indicator(diagram(1, {})) == 0.0);
  const double sqrt2 = std::sqrt(2.0);
  CHECK(l1_indicator(diagram(1, {{1, sqrt2, 1}})) ==
        doctest::Approx((3 - 2 * sqrt2) / 4).epsilon(1e-14));
  const std::vector<PersistencePair> disjoint{{0, 2, 1}, {10, 12, 1}};
  CHECK(l1_indicator(diagram(1, disjoint)) == 2.0);
  CHECK(oracle_area(disjoint, 1) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(l1_indicator(diagram(1, {{0, kInfinity, 1}})) == 0.0);
}

TEST_CASE("l0 indicator") {
  const std::vector<PersistencePair> three{{0, 1, 0}, {0, 1, 0}, {0, kInfinity, 0}};
  CHECK(l0_indicator(diagram(0, three)) == 0.25);
  CHECK(l0_indicator(diagram(0, {{0, 1.5, 0}, {0, kInfinity, 0}})) == 0.0);
  const std::vector<PersistencePair> nested{{0, 1, 0}, {0, 3, 0}};
  CHECK(oracle_area(nested, 2) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(l0_indicator(diagram(0, nested)) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("c1 indicator") {
  CHECK(c1_indicator(3.5, 3.5) == 3.5);
  CHECK(c1_indicator(5, 2) == 8);
  CHECK(c1_indicator(0, 4) == -4);
}

TEST_CASE("worked windows") {
  const auto tri = window_diagrams(cloud(oracle::points({{0, 0}, {1, 1}, {1, 0}})));
  CHECK(l0_indicator(tri.h0) == 0.25);
  CHECK(l1_indicator(tri.h1) == 0.0);
  const auto sq = window_diagrams(cloud(oracle::points({{0, 0}, {1, 0}, {1, 1}, {0, 1}})));
  CHECK(l1_indicator(sq.h1) == doctest::Approx((3 - 2 * std::sqrt(2.0)) / 4).epsilon(1e-12));
  const auto two = window_diagrams(cloud(oracle::points({{0, 0}, {3, 4}})));
  CHECK(l0_indicator(two.h0) == 0.0);
}

TEST_CASE("identical windows give constant series with c1 = l1") {
  std::mt19937_64 rng(2);
  const auto pts = oracle::random_cloud(rng, 20, 4);
  std::vector<WindowCloud> windows;
  for (std::size_t t = 0; t < 6; ++t) windows.push_back(cloud(pts, t));
  const auto series = compute_norm_series(windows);
  REQUIRE(series.windows.size() == 6);
  CHECK(series.window_len == 20);
  CHECK_FALSE(series.windows[0].c1.has_value());
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(series.windows[i].t == i);
    CHECK(series.windows[i].l0 == series.windows[0].l0);
    CHECK(series.windows[i].l1 == series.windows[0].l1);
    if (i > 0) CHECK(series.windows[i].c1 == series.windows[i].l1);
  }
  CHECK(series.windows[0].l0 > 0.0);
}

TEST_CASE("collinear windows have zero l1") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<WindowCloud> windows;
  for (std::size_t t = 0; t < 5; ++t) {
    RowMatrix pts(15, 3);
    for (std::size_t i = 0; i < 15; ++i) {
      const double s = u(rng);
      pts(i, 0) = s;
      pts(i, 1) = 2 * s;
      pts(i, 2) = -s;
    }
    windows.push_back(cloud(pts, t));
  }
  for (const auto& w : compute_norm_series(windows).windows) {
    CHECK(w.l1 == 0.0);
    CHECK(w.l0 >= 0.0);
  }
}

TEST_CASE("series equals independent per-window computations for any thread count") {
  std::mt19937_64 rng(6);
  const auto windows = random_windows(rng, 9, 12, 3);
  const auto serial = compute_norm_series(windows, {std::nullopt, 1});
  for (unsigned threads : {2u, 4u, 0u}) {
    const auto parallel = compute_norm_series(windows, {std::nullopt, threads});
    CHECK(parallel.windows == serial.windows);
  }
  for (std::size_t i = 0; i < windows.size(); ++i) {
    const auto d = window_diagrams(windows[i]);
    CHECK(serial.windows[i].l0 == l0_indicator(d.h0));
    CHECK(serial.windows[i].l1 == l1_indicator(d.h1));
  }
}

TEST_CASE("indicators are invariant under coordinate permutation") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    const auto pts = oracle::random_cloud(rng, 16, 4);
    RowMatrix swapped(16, 4);
    for (std::size_t i = 0; i < 16; ++i)
      for (std::size_t c = 0; c < 4; ++c) swapped(i, c) = pts(i, (c + 1) % 4);
    const auto a = window_diagrams(cloud(pts));
    const auto b = window_diagrams(cloud(swapped));
    CHECK(l0_indicator(a.h0) == doctest::Approx(l0_indicator(b.h0)).epsilon(1e-12));
    CHECK(l1_indicator(a.h1) == doctest::Approx(l1_indicator(b.h1)).epsilon(1e-12));
  }
}

TEST_CASE("indicators scale quadratically with the cloud") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto pts = oracle::random_cloud(rng, 14, 3);
    const auto base = window_diagrams(cloud(pts));
    for (double c : {0.5, 2.0, 10.0}) {
      RowMatrix scaled = pts;
      for (std::size_t i = 0; i < 14; ++i)
        for (std::size_t k = 0; k < 3; ++k) scaled(i, k) *= c;
      const auto d = window_diagrams(cloud(scaled));
      CHECK(l0_indicator(d.h0) == doctest::Approx(c * c * l0_indicator(base.h0)).epsilon(1e-9));
      CHECK(l1_indicator(d.h1) == doctest::Approx(c * c * l1_indicator(base.h1)).epsilon(1e-9));
    }
  }
}

TEST_CASE("errors carry the window index") {
  std::vector<WindowCloud> windows{cloud(oracle::points({{0, 0}, {1, 1}}), 0),
                                   cloud(RowMatrix(0, 2), 5)};
  try {
    compute_norm_series(windows);
    FAIL("expected EmptyCloud");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyCloud);
    CHECK(std::string(e.what()).find("window 5") != std::string::npos);
  }
  CHECK_THROWS_AS(compute_norm_series({}), Error);
}

TEST_CASE("explicit max scale truncates") {
  const auto sq = cloud(oracle::points({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  const auto d = window_diagrams(sq, {1.2, 1});
  CHECK(d.h1.essential_count() == 1);
  CHECK(l1_indicator(d.h1) == 0.0);
}
