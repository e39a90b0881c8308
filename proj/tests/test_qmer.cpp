#include <doctest.h>

#include <algorithm>
#include <random>

#include "esq/oracles.hpp"
#include "esq/qmer.hpp"

using namespace esq;

namespace {

const AxisRect unit{0, 1, 0, 1};

std::vector<Point2> random_points(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(0.01, 0.99);
  std::vector<Point2> pts;
  for (int i = 0; i < n; ++i) pts.push_back({u(rng), u(rng)});
  return pts;
}

std::vector<AxisRect> sorted(std::vector<AxisRect> v) {
  std::sort(v.begin(), v.end(), mer_before);
  return v;
}

}  // namespace

TEST_CASE("MER enumeration small cases") {
  CHECK(enumerate_mers({}, unit) == std::vector<AxisRect>{unit});
  std::vector<Point2> one{{0.3, 0.4}};
  auto m = sorted(enumerate_mers(one, unit));
  REQUIRE(m.size() == 4);
  CHECK(m[0] == AxisRect{0.3, 1, 0, 1});
  CHECK(m[1] == AxisRect{0, 1, 0.4, 1});
  CHECK(m[2] == AxisRect{0, 1, 0, 0.4});
  CHECK(m[3] == AxisRect{0, 0.3, 0, 1});

  auto kind_of = [](std::vector<Point2> pts, AxisRect r) -> std::optional<ErrorKind> {
    try {
      enumerate_mers(pts, r);
    } catch (const GeometryError& e) {
      return e.kind();
    }
    return std::nullopt;
  };
  CHECK(kind_of({{0.2, 0.5}, {0.2, 0.7}}, unit) == ErrorKind::DegenerateInput);
  CHECK(kind_of({{0.2, 0.5}, {0.4, 0.5}}, unit) == ErrorKind::DegenerateInput);
  CHECK(kind_of({{1.0, 0.5}}, unit) == ErrorKind::PreconditionViolated);
}

TEST_CASE("MER enumeration matches brute force") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 12;
    auto pts = random_points(rng, n);
    auto got = sorted(enumerate_mers(pts, unit));
    auto want = sorted(brute_force_mers(pts, unit));
    CHECK(got == want);
    CHECK(int(got.size()) >= n + 1);
  }
}

TEST_CASE("cell assignment") {
  std::vector<Point2> one{{0.3, 0.4}};
  auto idx = MerIndex::build(one, unit);
  CHECK(idx.columns() == 2);
  CHECK(idx.rows() == 2);
  // Both upper cells and the lower right cell lie in the right slab (0.7).
  CHECK(idx.mers()[idx.cell_mer(1, 1)] == AxisRect{0.3, 1, 0, 1});
  CHECK(idx.mers()[idx.cell_mer(1, 0)] == AxisRect{0.3, 1, 0, 1});
  CHECK(idx.mers()[idx.cell_mer(0, 1)] == AxisRect{0, 1, 0.4, 1});
  // Lower left: bottom slab (0.4) beats left slab (0.3).
  CHECK(idx.mers()[idx.cell_mer(0, 0)] == AxisRect{0, 1, 0, 0.4});

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    auto pts = random_points(rng, 1 + trial % 12);
    auto idx2 = MerIndex::build(pts, unit);
    auto all = brute_force_mers(pts, unit);
    for (std::size_t i = 0; i < idx2.columns(); ++i) {
      for (std::size_t j = 0; j < idx2.rows(); ++j) {
        AxisRect c = idx2.cell(i, j);
        Point2 mid{0.5 * (c.xmin + c.xmax), 0.5 * (c.ymin + c.ymax)};
        std::optional<AxisRect> best;
        for (const auto& r : all) {
          if (r.contains(mid) && (!best || mer_before(r, *best))) best = r;
        }
        REQUIRE(best);
        CHECK(idx2.mers()[idx2.cell_mer(i, j)] == *best);
        for (const auto& r : all) {
          bool in = r.contains(mid);
          CHECK((in ? (r.xmin <= c.xmin && c.xmax <= r.xmax && r.ymin <= c.ymin && c.ymax <= r.ymax)
                    : (r.xmax <= c.xmin || c.xmax <= r.xmin || r.ymax <= c.ymin || c.ymax <= r.ymin)));
        }
      }
    }
  }
}

TEST_CASE("rectangle queries") {
  auto empty = MerIndex::build({}, unit);
  CHECK(*empty.query({0.2, 0.9}).rect == unit);
  std::vector<Point2> one{{0.3, 0.4}};
  auto idx = MerIndex::build(one, unit);
  auto a = idx.query({0.8, 0.8});
  REQUIRE(a.kind == QueryAnswer::Kind::Rectangle);
  CHECK(*a.rect == AxisRect{0.3, 1, 0, 1});
  CHECK(a.rect->area() == doctest::Approx(0.7));
  CHECK_THROWS_AS(idx.query({1.5, 0.5}), GeometryError);

  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 40; ++trial) {
    auto pts = random_points(rng, 1 + trial % 12);
    auto idx2 = MerIndex::build(pts, unit);
    for (int k = 0; k < 30; ++k) {
      Point2 q{u(rng), u(rng)};
      // Some queries on grid lines and corners.
      if (k % 5 == 0) q.x = pts[k % pts.size()].x;
      if (k % 7 == 0) q.y = pts[(k + 1) % pts.size()].y;
      if (k == 29) q = pts[0];
      CHECK(*idx2.query(q).rect == *oracle_qmer(pts, unit, q).rect);
    }
  }
}
