#include <doctest.h>

#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "esq/oracles.hpp"
#include "esq/qmec_points.hpp"
#include "lemma_checks.hpp"

using namespace esq;

namespace {

std::vector<Point2> random_points(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<Point2> pts;
  for (int i = 0; i < n; ++i) pts.push_back({u(rng), u(rng)});
  return pts;
}

std::vector<Point2> jittered_square(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> j(-1e-6, 1e-6);
  return {{0 + j(rng), 0 + j(rng)}, {1 + j(rng), 0 + j(rng)}, {1 + j(rng), 1 + j(rng)}, {0 + j(rng), 1 + j(rng)}};
}

}  // namespace

TEST_CASE("Voronoi diagram of a triangle") {
  std::vector<Point2> pts{{0, 0}, {1, 0}, {0.3, 0.8}};
  auto vd = VoronoiDiagram::build(pts);
  CHECK(vd.finite_count() == 1);
  CHECK(vd.vertices().size() == 4);
  int rays = 0;
  for (const auto& e : vd.edges()) rays += e.unbounded;
  CHECK(rays == 3);
  Circle cc = circumcircle(pts[0], pts[1], pts[2]);
  CHECK(vd.vertex(0).radius == doctest::Approx(cc.radius));
  for (std::size_t v = 1; v < 4; ++v) {
    CHECK(vd.vertex(int(v)).artificial);
    CHECK(vd.vertex(int(v)).radius > cc.radius);
  }
  auto idx = PointsQmecIndex::build(pts);
  CHECK(idx.lcq().circles().size() == 4);
}

TEST_CASE("degenerate point sets") {
  auto kind_of = [](std::vector<Point2> pts) {
    try {
      VoronoiDiagram::build(pts);
    } catch (const GeometryError& e) {
      return e.kind();
    }
    return ErrorKind::PreconditionViolated;
  };
  CHECK(kind_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}}) == ErrorKind::DegenerateInput);
  CHECK(kind_of({{0, 0}, {1, 0}, {0.5, 0.5}, {1, 0}}) == ErrorKind::DegenerateInput);
  CHECK(kind_of({{0, 0}, {1, 1}, {2, 2}}) == ErrorKind::DegenerateInput);
  CHECK(kind_of({{0, 0}, {1, 1}}) == ErrorKind::DegenerateInput);
}

TEST_CASE("Voronoi invariants and artificial placement") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto pts = random_points(rng, 5 + trial);
    auto vd = VoronoiDiagram::build(pts);
    double rmax = 0;
    for (std::size_t v = 0; v < vd.finite_count(); ++v) {
      const auto& vx = vd.vertex(int(v));
      for (int s : vx.sites) CHECK(std::fabs(dist(vx.pos, pts[s]) - vx.radius) <= 1e-9);
      for (const auto& p : pts) CHECK(dist(p, vx.pos) >= vx.radius - 1e-9);
      rmax = std::max(rmax, vx.radius);
    }
    for (const auto& e : vd.edges()) {
      Point2 mid = vd.point_on(int(&e - vd.edges().data()), 0.5);
      double d0 = dist(mid, pts[e.sites[0]]), d1 = dist(mid, pts[e.sites[1]]);
      CHECK(std::fabs(d0 - d1) <= 1e-9);
      for (const auto& p : pts) CHECK(dist(p, mid) >= d0 - 1e-9);
    }
    CHECK(vd.artificial_overlaps().empty());
    // Grid audit of pairwise artificial overlap inside the hull.
    const AxisRect box = vd.hull().bounding_box();
    std::vector<Point2> grid;
    for (int i = 1; i < 150; ++i) {
      for (int j = 1; j < 150; ++j) {
        Point2 p{box.xmin + (box.xmax - box.xmin) * i / 150, box.ymin + (box.ymax - box.ymin) * j / 150};
        if (point_in_polygon(vd.hull(), p) == Location::Inside && boundary_distance(vd.hull(), p) > 1e-7) {
          grid.push_back(p);
        }
      }
    }
    CHECK(!grid.empty());
    for (std::size_t u = vd.finite_count(); u < vd.vertices().size(); ++u) {
      CHECK(vd.vertex(int(u)).radius > rmax);
      for (std::size_t w = u + 1; w < vd.vertices().size(); ++w) {
        Circle a{vd.vertex(int(u)).pos, vd.vertex(int(u)).radius};
        Circle b{vd.vertex(int(w)).pos, vd.vertex(int(w)).radius};
        int deep = 0;
        for (Point2 p : grid) deep += dist(p, a.center) < a.radius - 1e-7 && dist(p, b.center) < b.radius - 1e-7;
        CHECK(deep == 0);
      }
    }
  }
}

TEST_CASE("overlapping edges match an exhaustive per-edge check") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    auto pts = random_points(rng, 4 + trial % 10);
    auto vd = VoronoiDiagram::build(pts);
    const int nv = int(vd.vertices().size());
    for (int v = 0; v < int(vd.finite_count()); ++v) {
      const double rv = vd.vertex(v).radius;
      // Vertices reachable from v through smaller MECs.
      std::vector<int> comp(nv, 0);
      comp[v] = 1;
      for (bool grew = true; grew;) {
        grew = false;
        for (const auto& e : vd.edges()) {
          for (auto [x, y] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
            if (comp[x] && !comp[y] && vd.vertex(y).radius < rv) comp[y] = grew = 1;
          }
        }
      }
      std::vector<int> want;
      for (int ei = 0; ei < int(vd.edges().size()); ++ei) {
        const auto& e = vd.edge(ei);
        bool hit = false;
        for (auto [x, y] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
          if (!comp[x] || vd.vertex(y).radius <= rv || y == v) continue;
          // Last point from x toward y with radius rv, by dense sampling.
          double tx = x == e.a ? 0.0 : 1.0;
          Point2 at = vd.point_on(ei, tx);
          for (int k = 0; k <= 20000; ++k) {
            double t = tx + (1.0 - 2.0 * tx) * k / 20000.0;
            if (vd.radius_on(ei, t) <= rv) at = vd.point_on(ei, t);
          }
          hit = hit || dist(at, vd.vertex(v).pos) <= 2 * rv + 1e-6;
        }
        if (hit) want.push_back(ei);
      }
      CHECK(compute_overlapping_edges(vd, v) == want);
      CHECK(want.size() <= 36);
    }
    // The largest finite vertex only rises into artificial vertices.
    int top = 0;
    for (int v = 0; v < int(vd.finite_count()); ++v) {
      if (vd.vertex(v).radius > vd.vertex(top).radius) top = v;
    }
    for (int e : compute_overlapping_edges(vd, top)) CHECK(vd.edge(e).unbounded);
  }
}

TEST_CASE("point-set queries") {
  std::mt19937_64 rng(5);
  auto sq = jittered_square(rng);
  auto idx = PointsQmecIndex::build(sq);
  auto a = idx.query({0.5, 0.5});
  REQUIRE(a.kind == QueryAnswer::Kind::BoundedCircle);
  CHECK(a.circle->radius == doctest::Approx(std::sqrt(0.5)).epsilon(1e-5));
  CHECK(idx.query({2, 2}).kind == QueryAnswer::Kind::UnboundedCircle);
  CHECK(idx.query(sq[0]).kind == QueryAnswer::Kind::UnboundedCircle);

  // On an edge at its max-radius end.
  const auto& vd = idx.diagram();
  for (int e = 0; e < int(vd.edges().size()); ++e) {
    if (vd.edge(e).unbounded) continue;
    int hi = vd.vertex(vd.edge(e).a).radius > vd.vertex(vd.edge(e).b).radius ? vd.edge(e).a : vd.edge(e).b;
    auto c = vd.largest_containing(e, vd.vertex(hi).pos);
    REQUIRE(c);
    CHECK(c->radius == doctest::Approx(vd.vertex(hi).radius));
  }
}

TEST_CASE("point-set index matches the oracle") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-0.1, 1.1);
  for (int trial = 0; trial < 40; ++trial) {
    auto pts = random_points(rng, 3 + trial % 30);
    auto idx = PointsQmecIndex::build(pts);
    CHECK(idx.max_overlapping() <= 36);
    for (int k = 0; k < 20; ++k) {
      Point2 q{u(rng), u(rng)};
      auto got = idx.query(q);
      auto want = oracle_qmec_points(pts, q);
      REQUIRE(got.kind == want.kind);
      if (got.kind != QueryAnswer::Kind::BoundedCircle) continue;
      CHECK(got.circle->radius == doctest::Approx(want.circle->radius).epsilon(1e-6));
      for (const auto& p : pts) CHECK(dist(p, got.circle->center) >= got.circle->radius - 1e-9);
      CHECK(dist(q, got.circle->center) <= got.circle->radius + 1e-9);
    }
  }
}

TEST_CASE("unique path lemma") {
  std::mt19937_64 rng(41);
  int pairs = 0;
  for (int trial = 0; trial < 10; ++trial) {
    auto vd = VoronoiDiagram::build(random_points(rng, 5 + trial % 6));
    auto audit = lemmas::audit_unique_paths(vd);
    pairs += audit.pairs;
    CHECK(audit.wrong_count == 0);
    CHECK(audit.procedure_failures == 0);
  }
  CHECK(pairs > 0);
}
