#include "esq/selftest.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "esq/generators.hpp"
#include "esq/lcq.hpp"
#include "esq/oracles.hpp"
#include "esq/qmec_convex.hpp"
#include "esq/qmec_points.hpp"
#include "esq/qmec_simple.hpp"
#include "esq/qmer.hpp"

namespace esq {

namespace {

int log2_ceil(std::size_t n) {
  int d = 0;
  while ((std::size_t(1) << d) < n) ++d;
  return d;
}

struct Run {
  const SelftestOptions& opt;
  SelftestReport rep;
  std::mt19937_64 rng;
  int trial = 0;
  double trial_dev = 0.0;

  explicit Run(const SelftestOptions& o) : opt(o), rng(o.seed) {}

  void fail(Point2 q, const std::string& what) {
    ++rep.mismatches;
    std::ostringstream s;
    s.precision(17);
    s << "mismatch mode=" << opt.mode << " seed=" << opt.seed << " trial=" << trial << " q=(" << q.x << ", " << q.y
      << "): " << what;
    if (rep.first_failure.empty()) rep.first_failure = s.str();
    if (opt.log) *opt.log << s.str() << '\n';
  }

  void deviation(double d) {
    trial_dev = std::max(trial_dev, d);
    rep.max_deviation = std::max(rep.max_deviation, d);
  }

  // Compares radii (and kinds) of two circle answers.
  void compare_circles(Point2 q, const QueryAnswer& got, const QueryAnswer& want, double tol) {
    ++rep.queries;
    if (got.kind != want.kind) {
      deviation(1.0);
      return fail(q, "answer kinds differ");
    }
    if (got.kind != QueryAnswer::Kind::BoundedCircle) return;
    const double rel = std::fabs(got.circle->radius - want.circle->radius) / want.circle->radius;
    deviation(rel);
    if (rel > tol) {
      std::ostringstream s;
      s << "radius " << got.circle->radius << " vs oracle " << want.circle->radius;
      fail(q, s.str());
    }
  }

  Point2 sample(const AxisRect& box, double grow) {
    const double gx = grow * (box.xmax - box.xmin), gy = grow * (box.ymax - box.ymin);
    std::uniform_real_distribution<double> ux(box.xmin - gx, box.xmax + gx), uy(box.ymin - gy, box.ymax + gy);
    return {ux(rng), uy(rng)};
  }

  void end_trial(std::size_t n) {
    if (opt.log) {
      *opt.log << opt.mode << " trial " << trial << " n=" << n << " max_dev=" << trial_dev << '\n';
    }
    trial_dev = 0.0;
    ++rep.trials;
  }

  // Skipped (degenerate) draws are replaced, up to ten times the budget.
  bool more(int target) const { return rep.trials < target && trial < 10 * target + 10; }

  int pick_n(int lo) {
    const int hi = std::max(lo, opt.n_max);
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  }

  void lcq() {
    const bool tree = opt.lcq != "sweep", sweep = opt.lcq != "tree";
    std::uniform_real_distribution<double> u(-2, 12);
    for (trial = 0; more(opt.trials); ++trial) {
      const int n = pick_n(1);
      auto cs = gen::random_circles(rng, n);
      auto set = CircleSet::from_circles(cs);
      std::optional<LcqTree> t;
      std::optional<LcqArrangement> a;
      try {
        if (tree) t = LcqTree::build(set);
        if (sweep) a = LcqArrangement::build(set);
      } catch (const GeometryError& e) {
        if (e.kind() != ErrorKind::DegenerateInput) throw;
        ++rep.skipped;
        continue;
      }
      if (t) {
        rep.max_depth = std::max(rep.max_depth, t->depth());
        if (t->depth() > log2_ceil(std::size_t(n)) + 1) {
          rep.depth_ok = false;
          fail({}, "LCQ tree depth " + std::to_string(t->depth()));
        }
      }
      for (int k = 0; k < opt.queries; ++k) {
        const Point2 q{u(rng), u(rng)};
        const auto want = oracle_lcq(cs, q).witness;
        ++rep.queries;
        bool bad = (t && t->query(q).witness != want) || (a && a->query(q).witness != want);
        deviation(bad ? 1.0 : 0.0);
        if (bad) fail(q, "circle ids differ");
      }
      end_trial(cs.size());
    }
  }

  void convex() {
    for (trial = 0; more(opt.trials); ++trial) {
      const Polygon poly = gen::random_convex(rng, pick_n(3));
      const auto idx = ConvexQmecIndex::build(poly);
      rep.max_depth = std::max(rep.max_depth, idx.mountains().max_depth());
      for (int k = 0; k < opt.queries; ++k) {
        const Point2 q = sample(poly.bounding_box(), 0.05);
        const auto got = idx.query(q);
        compare_circles(q, got, oracle_qmec_convex(poly, q), 1e-6);
        if (got.kind == QueryAnswer::Kind::BoundedCircle &&
            std::fabs(boundary_distance(poly, got.circle->center) - got.circle->radius) > 1e-7) {
          fail(q, "center clearance differs from radius");
        }
      }
      end_trial(poly.size());
    }
  }

  void simple() {
    const auto built_in = opt.constructed ? gen::multi_mountain_instances() : std::vector<Polygon>{};
    const int total = opt.trials + int(built_in.size());
    for (trial = 0; more(total); ++trial) {
      Polygon poly;
      std::optional<SimpleQmecIndex> idx;
      if (trial < int(built_in.size())) {
        poly = built_in[trial];
        idx = SimpleQmecIndex::build(poly);
      } else {
        try {
          poly = gen::random_star(rng, pick_n(5));
          idx = SimpleQmecIndex::build(poly);
        } catch (const GeometryError& e) {
          if (e.kind() != ErrorKind::DegenerateInput && e.kind() != ErrorKind::NotSimple) throw;
          ++rep.skipped;
          continue;
        }
      }
      rep.max_sr = std::max(rep.max_sr, idx->max_same_radius());
      rep.max_depth = std::max(rep.max_depth, idx->depth());
      if (idx->depth() > log2_ceil(idx->axis().nodes().size()) + 1) {
        rep.depth_ok = false;
        fail({}, "centroid tree depth " + std::to_string(idx->depth()));
      }
      for (int k = 0; k < opt.queries; ++k) {
        Point2 q = sample(poly.bounding_box(), 0.0);
        if (point_in_polygon(poly, q) != Location::Inside) {
          ++rep.queries;
          if (idx->query(q).kind != QueryAnswer::Kind::UnboundedCircle) fail(q, "outside query not unbounded");
          continue;
        }
        SimpleQueryStats st;
        const auto got = idx->query(q, &st);
        rep.max_sq = std::max(rep.max_sq, std::size_t(st.same_radius));
        rep.max_mountains = std::max(rep.max_mountains, st.mountains);
        compare_circles(q, got, oracle_qmec_simple(poly, q), 1e-4);
      }
      end_trial(poly.size());
    }
  }

  void points() {
    for (trial = 0; more(opt.trials); ++trial) {
      const auto pts = gen::random_points(rng, pick_n(3));
      std::optional<PointsQmecIndex> idx;
      try {
        idx = PointsQmecIndex::build(pts);
      } catch (const GeometryError& e) {
        if (e.kind() != ErrorKind::DegenerateInput) throw;
        ++rep.skipped;
        continue;
      }
      rep.max_ov = std::max(rep.max_ov, idx->max_overlapping());
      rep.max_depth = std::max(rep.max_depth, idx->lcq().depth());
      if (idx->lcq().depth() > log2_ceil(idx->lcq().circles().size()) + 1) {
        rep.depth_ok = false;
        fail({}, "LCQ tree depth " + std::to_string(idx->lcq().depth()));
      }
      const AxisRect box{0, 1, 0, 1};
      for (int k = 0; k < opt.queries; ++k) {
        // Every fifth query sits on a site, which is on or outside the hull
        // boundary or interior; the oracle decides.
        const Point2 q = k % 5 == 4 ? pts[std::size_t(k) % pts.size()] : sample(box, 0.1);
        compare_circles(q, idx->query(q), oracle_qmec_points(pts, q), 1e-6);
      }
      end_trial(pts.size());
    }
  }

  void rect() {
    const AxisRect region{0, 1, 0, 1};
    for (trial = 0; more(opt.trials); ++trial) {
      const auto pts = gen::random_points_in(rng, pick_n(0), region);
      const auto idx = MerIndex::build(pts, region);
      for (int k = 0; k < opt.queries; ++k) {
        Point2 q = sample(region, 0.0);
        if (!pts.empty() && k % 4 == 3) q.x = pts[std::size_t(k) % pts.size()].x;
        ++rep.queries;
        const bool same = *idx.query(q).rect == *oracle_qmer(pts, region, q).rect;
        deviation(same ? 0.0 : 1.0);
        if (!same) fail(q, "rectangles differ");
      }
      end_trial(pts.size());
    }
  }
};

}  // namespace

SelftestReport run_selftest(const SelftestOptions& opt) {
  Run run(opt);
  if (opt.mode == "lcq") {
    run.lcq();
  } else if (opt.mode == "convex") {
    run.convex();
  } else if (opt.mode == "simple") {
    run.simple();
  } else if (opt.mode == "points") {
    run.points();
  } else if (opt.mode == "rect") {
    run.rect();
  } else {
    throw std::invalid_argument("unknown selftest mode '" + opt.mode + "'");
  }
  return run.rep;
}

}  // namespace esq
