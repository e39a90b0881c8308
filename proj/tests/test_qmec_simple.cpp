#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "esq/oracles.hpp"
#include "esq/qmec_convex.hpp"
#include "esq/qmec_simple.hpp"
#include "lemma_checks.hpp"
#include "test_shapes.hpp"

using namespace esq;

namespace {

int log2_ceil(std::size_t n) {
  int k = 0;
  while ((std::size_t(1) << k) < n) ++k;
  return k;
}

void check_against_oracle(const Polygon& poly, std::mt19937_64& rng, int queries) {
  auto idx = SimpleQmecIndex::build(poly);
  SimpleOracle oracle(poly);
  AxisRect box = poly.bounding_box();
  std::uniform_real_distribution<double> ux(box.xmin, box.xmax), uy(box.ymin, box.ymax);
  for (int k = 0; k < queries; ++k) {
    Point2 q{ux(rng), uy(rng)};
    SimpleQueryStats st;
    auto got = idx.query(q, &st);
    if (point_in_polygon(poly, q) != Location::Inside) {
      CHECK(got.kind == QueryAnswer::Kind::UnboundedCircle);
      continue;
    }
    REQUIRE(got.kind == QueryAnswer::Kind::BoundedCircle);
    auto want = oracle.query(q);
    CHECK(got.circle->radius == doctest::Approx(want.circle->radius).epsilon(1e-4));
    CHECK(clearance(poly, got.circle->center) >= got.circle->radius - 1e-7);
    CHECK(dist(got.circle->center, q) <= got.circle->radius + 1e-9);
    CHECK(st.same_radius <= 36);
    CHECK(st.mountains <= 36);
  }
  CHECK(idx.max_same_radius() <= 36);
  CHECK(idx.depth() <= log2_ceil(idx.axis().nodes().size()) + 1);
}

}  // namespace

TEST_CASE("simple index agrees with the convex index on convex input") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 10; ++trial) {
    Polygon poly = test_shapes::random_convex(rng, 4 + 3 * trial);
    auto s = SimpleQmecIndex::build(poly);
    auto c = ConvexQmecIndex::build(poly);
    CHECK(s.mountains().mountains().size() == 1);
    for (int k = 0; k < 100; ++k) {
      Point2 q{u(rng), u(rng)};
      auto a = s.query(q), b = c.query(q);
      REQUIRE(a.kind == b.kind);
      if (a.kind == QueryAnswer::Kind::BoundedCircle) {
        CHECK(std::fabs(a.circle->radius - b.circle->radius) <= 1e-9);
      }
    }
  }
}

TEST_CASE("simple index rejects bad input") {
  try {
    SimpleQmecIndex::build(Polygon::from_ring({{0, 0}, {2, 2}, {2, 0}, {0, 1}}));
    FAIL("expected NotSimple");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::NotSimple);
  }
  try {
    SimpleQmecIndex::build(Polygon::from_ring({{0, 0}, {2, 0}, {2, 1}, {0, 1}}));
    FAIL("expected DegenerateInput");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::DegenerateInput);
  }
}

TEST_CASE("dumbbell") {
  std::mt19937_64 rng(1);
  Polygon poly = test_shapes::dumbbell();
  auto idx = SimpleQmecIndex::build(poly);
  CHECK(idx.mountains().mountains().size() >= 2);
  check_against_oracle(poly, rng, 60);
  // Left room next to the valley.
  SimpleOracle oracle(poly);
  Point2 q{2.0, 1.0};
  CHECK(idx.query(q).circle->radius == doctest::Approx(oracle.query(q).circle->radius).epsilon(1e-4));
}

TEST_CASE("five lobes") {
  std::mt19937_64 rng(2);
  Polygon poly = test_shapes::five_lobes();
  auto idx = SimpleQmecIndex::build(poly);
  CHECK(idx.mountains().mountains().size() >= 5);
  std::set<int> ids;
  for (const auto& g : idx.tree().front().guiding) ids.insert(g.mountains.begin(), g.mountains.end());
  CHECK(ids.size() >= 2);
  check_against_oracle(poly, rng, 60);
}

TEST_CASE("simple index matches the oracle on random stars") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    check_against_oracle(test_shapes::random_star(rng, 8 + 2 * trial), rng, 20);
  }
}

TEST_CASE("TAG arrays and descent soundness") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 10; ++trial) {
    Polygon poly = test_shapes::random_star(rng, 10 + trial);
    auto idx = SimpleQmecIndex::build(poly);
    for (std::size_t a = 0; a < idx.axis().arcs().size(); ++a) {
      CHECK(int(idx.tag(int(a)).size()) <= idx.depth());
    }
    CHECK(lemmas::centroid_split_violations(idx) == 0);
  }
}

TEST_CASE("M^q is connected") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 6; ++trial) {
    Polygon poly = test_shapes::random_star(rng, 8 + 3 * trial);
    auto axis = MedialAxis::build(poly);
    const AxisRect box = poly.bounding_box();
    std::uniform_real_distribution<double> ux(box.xmin, box.xmax), uy(box.ymin, box.ymax);
    for (int k = 0; k < 10; ++k) {
      const Point2 q{ux(rng), uy(rng)};
      if (point_in_polygon(poly, q) != Location::Inside) continue;
      CHECK(lemmas::mq_components(axis, q, 200) == 1);
    }
  }
}
