#include <doctest.h>

#include <random>

#include "esq/generators.hpp"
#include "esq/geometry.hpp"
#include "esq/predicates.hpp"

using namespace esq;

namespace {

Polygon unit_square() { return Polygon::from_ring({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

}  // namespace

TEST_CASE("circle_contains is closed") {
  Circle c{{0, 0}, 1};
  CHECK(circle_contains(c, {0, 0}));
  CHECK(circle_contains(c, {1, 0}));
  CHECK_FALSE(circle_contains(c, {1.1, 0}));
}

TEST_CASE("circumcircle examples") {
  Circle c = circumcircle({0, 0}, {1, 0}, {0, 1});
  CHECK(c.center.x == doctest::Approx(0.5));
  CHECK(c.center.y == doctest::Approx(0.5));
  CHECK(c.radius == doctest::Approx(std::sqrt(0.5)));
  Circle d = circumcircle({-1, 0}, {1, 0}, {0, 1});
  CHECK(d.center.x == doctest::Approx(0.0));
  CHECK(d.center.y == doctest::Approx(0.0));
  CHECK(d.radius == doctest::Approx(1.0));
  try {
    circumcircle({0, 0}, {1, 0}, {2, 0});
    FAIL("expected CollinearInput");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::CollinearInput);
  }
}

TEST_CASE("circumcircle is equidistant on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-100, 100);
  for (int t = 0; t < 2000; ++t) {
    Point2 a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
    if (std::fabs(orient2d_value(a, b, c)) < 1e-3) continue;
    Circle k = circumcircle(a, b, c);
    double da = dist(k.center, a), db = dist(k.center, b), dc = dist(k.center, c);
    double m = std::max({da, db, dc});
    CHECK(std::fabs(da - db) <= 1e-9 * m);
    CHECK(std::fabs(da - dc) <= 1e-9 * m);
  }
}

TEST_CASE("circle intersections") {
  auto t = circle_circle_intersections({{0, 0}, 1}, {{2, 0}, 1});
  REQUIRE(t.size() == 1);
  CHECK(t[0].x == doctest::Approx(1.0));
  CHECK(t[0].y == doctest::Approx(0.0));
  auto s = circle_circle_intersections({{0, 0}, 1}, {{1, 0}, 1});
  REQUIRE(s.size() == 2);
  CHECK(s[0].x == doctest::Approx(0.5));
  CHECK(std::fabs(s[0].y) == doctest::Approx(std::sqrt(3.0) / 2));
  CHECK(s[0].y == doctest::Approx(-s[1].y));
  CHECK(circle_circle_intersections({{0, 0}, 1}, {{5, 0}, 1}).empty());
  try {
    circle_circle_intersections({{0, 0}, 1}, {{0, 0}, 1});
    FAIL("expected IdenticalCircles");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::IdenticalCircles);
  }

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-10, 10), r(0.5, 8);
  for (int k = 0; k < 2000; ++k) {
    Circle c1{{u(rng), u(rng)}, r(rng)}, c2{{u(rng), u(rng)}, r(rng)};
    for (Point2 p : circle_circle_intersections(c1, c2)) {
      CHECK(std::fabs(dist(p, c1.center) - c1.radius) <= 1e-9 * std::max(1.0, c1.radius));
      CHECK(std::fabs(dist(p, c2.center) - c2.radius) <= 1e-9 * std::max(1.0, c2.radius));
    }
  }
}

TEST_CASE("point in polygon") {
  Polygon sq = unit_square();
  CHECK(point_in_polygon(sq, {0.5, 0.5}) == Location::Inside);
  CHECK(point_in_polygon(sq, {1, 0.5}) == Location::OnBoundary);
  CHECK(point_in_polygon(sq, {2, 2}) == Location::Outside);

  std::vector<Point2> ring{{0, 0}, {4, 0}, {4, 3}, {2, 1}, {0, 3}};
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 5);
  std::vector<Point2> qs;
  for (int k = 0; k < 300; ++k) qs.push_back({u(rng), u(rng)});
  Polygon base = Polygon::from_ring(ring);
  for (std::size_t rot = 1; rot < ring.size(); ++rot) {
    std::vector<Point2> r2(ring.begin() + rot, ring.end());
    r2.insert(r2.end(), ring.begin(), ring.begin() + rot);
    Polygon p = Polygon::from_ring(r2);
    for (Point2 q : qs) CHECK(point_in_polygon(p, q) == point_in_polygon(base, q));
  }
}

TEST_CASE("clearance") {
  Polygon sq = unit_square();
  CHECK(clearance(sq, {0.5, 0.5}) == doctest::Approx(0.5));
  CHECK(clearance(sq, {0.25, 0.5}) == doctest::Approx(0.25));
  try {
    clearance(sq, {1.5, 0.5});
    FAIL("expected OutsidePolygon");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::OutsidePolygon);
  }
}

TEST_CASE("convex hull") {
  std::vector<Point2> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
  CHECK(convex_hull(pts).size() == 4);
  std::vector<Point2> tri{{0, 0}, {2, 0}, {1, 3}};
  Polygon h = convex_hull(tri);
  CHECK(h.size() == 3);
  CHECK(h.signed_area() == doctest::Approx(3.0));
  std::vector<Point2> col{{0, 0}, {1, 0}, {2, 0}};
  CHECK_THROWS_AS(convex_hull(col), GeometryError);
}

TEST_CASE("polygon validation") {
  CHECK_THROWS_AS(Polygon::from_ring({{0, 0}, {1, 0}}), GeometryError);
  // Bow tie.
  try {
    Polygon::from_ring({{0, 0}, {2, 2}, {2, 0}, {0, 1}});
    FAIL("expected NotSimple");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::NotSimple);
  }
  Polygon cw = Polygon::from_ring({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  CHECK(cw.signed_area() > 0);
  CHECK(cw.is_convex());
  Polygon l = Polygon::from_ring({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
  CHECK_FALSE(l.is_convex());
  CHECK(l.is_reflex(3));
}

TEST_CASE("predicates agree with exact sign on near-degenerate input") {
  // Points nearly on the line y = x, perturbed by one ulp.
  Point2 a{0.5, 0.5}, b{12.0, 12.0};
  for (int k = 0; k < 64; ++k) {
    double x = 0.5 + k * 1e-3;
    Point2 c{x, std::nextafter(x, 1.0)};
    CHECK(orient2d(a, b, c) > 0);
    Point2 d{x, x};
    CHECK(orient2d(a, b, d) == 0);
  }
  CHECK(incircle({0, 0}, {1, 0}, {0, 1}, {1, 1}) == 0);
  CHECK(incircle({0, 0}, {1, 0}, {0, 1}, {0.5, 0.5}) > 0);
  CHECK(incircle({0, 0}, {1, 0}, {0, 1}, {2, 2}) < 0);
}

TEST_CASE("edge bands agree with the full scan") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const Polygon poly = t % 2 ? gen::random_star(rng, 5 + t) : gen::random_convex(rng, 3 + t);
    const EdgeBands bands(poly);
    const AxisRect box = poly.bounding_box();
    std::uniform_real_distribution<double> ux(box.xmin - 0.1, box.xmax + 0.1), uy(box.ymin - 0.1, box.ymax + 0.1);
    for (int k = 0; k < 500; ++k) {
      const Point2 p{ux(rng), uy(rng)};
      REQUIRE(bands.locate(p) == point_in_polygon(poly, p));
    }
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Point2 a = poly.vertex(i);
      CHECK(bands.locate(a) == Location::OnBoundary);
      const Point2 m = 0.5 * (a + poly.vertex((i + 1) % poly.size()));
      CHECK(bands.locate(m) == point_in_polygon(poly, m));
    }
  }
}
