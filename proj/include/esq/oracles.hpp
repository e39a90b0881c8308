#pragma once

// Brute-force reference answers. These share nothing with the indexes
// except the geometry primitives.

#include <span>
#include <vector>

#include "esq/geometry.hpp"

namespace esq {

/// Largest circle containing q by linear scan (radius, then smaller id).
/// Ids default to positions.
QueryAnswer oracle_lcq(std::span<const Circle> circles, Point2 q, std::span<const long> ids = {});

/// Largest empty circle of the point set containing q: empty circumcircles of
/// site triples and of (site, site, q).
QueryAnswer oracle_qmec_points(std::span<const Point2> points, Point2 q);

/// Convex polygon oracle. Circles tangent to three edge lines are enumerated
/// once; per query we add circles through q tangent to two edge lines.
class ConvexOracle {
 public:
  explicit ConvexOracle(Polygon poly);
  QueryAnswer query(Point2 q) const;

 private:
  bool empty_circle(const Circle& c) const;

  Polygon poly_;
  std::vector<Point2> normal_;  // inward unit normals
  std::vector<double> offset_;  // interior: dot(normal, x) >= offset
  std::vector<Circle> tangent3_;
};

QueryAnswer oracle_qmec_convex(const Polygon& poly, Point2 q);

namespace detail {

/// An edge's supporting line (distance measured on the inward side) or a vertex.
struct BoundarySite {
  bool point = false;
  Point2 p;
  Point2 n;
  double o = 0.0;
  double d(Point2 x) const { return point ? dist(x, p) : dot(n, x) - o; }
};

}  // namespace detail

/// Simple polygon oracle: maximize clearance(c) subject to |c - q| <= clearance(c).
/// The clearance grid is sampled once per polygon; each query refines
/// multiple feasible seeds and also maximizes the star-shaped feasible
/// region's radial function around q. Circles pinned by three boundary sites,
/// or by two sites and q, are checked as exact candidates.
class SimpleOracle {
 public:
  explicit SimpleOracle(Polygon poly, int grid = 400);
  /// Throws OutsidePolygon unless q is strictly inside.
  QueryAnswer query(Point2 q) const;

 private:
  Polygon poly_;
  int grid_;
  AxisRect box_;
  double hx_ = 0.0;
  double hy_ = 0.0;
  std::vector<double> clear_;  // -1 outside
  std::optional<Circle> empty_circle_at(Point2 c, double r) const;

  std::vector<detail::BoundarySite> sites_;
  std::vector<Circle> pinned_;
};

QueryAnswer oracle_qmec_simple(const Polygon& poly, Point2 q);

/// Largest empty axis-parallel rectangle inside `region` containing q, by
/// enumeration of all side combinations. Ties: smaller (xmin, ymin, xmax, ymax).
/// Throws OutsideRegion.
QueryAnswer oracle_qmer(std::span<const Point2> points, const AxisRect& region, Point2 q);

/// All maximal empty rectangles by the same enumeration.
std::vector<AxisRect> brute_force_mers(std::span<const Point2> points, const AxisRect& region);

}  // namespace esq
