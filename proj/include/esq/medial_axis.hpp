#pragma once

// Medial axis of a simple polygon as a tree of line and parabola arcs.
//
// Every arc is the bisector of two boundary sites (an edge or a reflex
// vertex) and its clearance is monotone between its end nodes; interior
// clearance minima are stored as explicit degree-2 nodes. Leaves are the
// convex polygon vertices.
//
// The polygon is also cut into one region per (arc, side site): the area
// swept by the perpendicular "spokes" from arc points to their closest point
// on that site. A point location over these regions gives, for any interior
// q, an axis point y on the ray from q's closest boundary point through q,
// and MEC_y contains q.

#include <memory>
#include <vector>

#include "esq/curve.hpp"
#include "esq/geometry.hpp"
#include "esq/locator.hpp"

namespace esq {

struct AxisSite {
  enum class Kind { Edge, Vertex };
  Kind kind = Kind::Edge;
  int index = -1;  // polygon edge i = (vertex i, vertex i+1), or vertex index

  friend bool operator==(const AxisSite&, const AxisSite&) = default;
};

/// Distance from p to the site (segment distance for edges).
double site_distance(const Polygon& poly, AxisSite site, Point2 p);

struct AxisNode {
  Point2 pos;
  double radius = 0.0;
  std::vector<int> arcs;
  int polygon_vertex = -1;  // set for leaves
};

enum class Trend { Rising, Falling, Constant };

struct AxisArc {
  int u = -1;  // curve parameter 0
  int v = -1;  // curve parameter 1
  Curve curve;
  AxisSite sites[2];
  Trend trend = Trend::Constant;  // clearance from u to v

  int other(int node) const { return node == u ? v : u; }
};

/// A point on the axis with its maximal empty circle.
struct AxisPoint {
  int arc = -1;
  double t = 0.0;
  Point2 pos;
  double radius = 0.0;

  Circle mec() const { return {pos, radius}; }
};

class MedialAxis {
 public:
  /// Throws DegenerateInput if the Voronoi construction does not yield a tree.
  static MedialAxis build(const Polygon& poly);

  const Polygon& polygon() const { return poly_; }
  const std::vector<AxisNode>& nodes() const { return nodes_; }
  const std::vector<AxisArc>& arcs() const { return arcs_; }
  const AxisNode& node(int i) const { return nodes_[i]; }
  const AxisArc& arc(int i) const { return arcs_[i]; }

  Point2 point_on_arc(int arc, double t) const;
  double clearance_on_arc(int arc, double t) const;
  AxisPoint at(int arc, double t) const;
  AxisPoint at_node(int node) const;
  /// Arc joining two adjacent nodes, or -1.
  int arc_between(int a, int b) const;
  bool is_leaf(int node) const { return nodes_[node].arcs.size() == 1; }

  /// Throws DegenerateInput when two internal nodes share a clearance within tol.
  void require_distinct_clearances(double tol = 1e-9) const;

  /// Closest axis point to a strictly interior q. Throws OutsidePolygon.
  AxisPoint nearest_point(Point2 q) const;

  /// Axis point whose MEC contains q, found by locating q among the spoke
  /// regions. Throws OutsidePolygon.
  AxisPoint ray_point(Point2 q) const;

  /// Spoke region holding q (-1 when the locator misses) and the signed
  /// distance from q to that region's site, positive inside. For q inside
  /// the polygon this is its clearance. O(log n).
  struct Located {
    int region = -1;
    double clearance = 0.0;
  };
  Located locate(Point2 q) const;
  /// ray_point for a q already located inside; no inside test.
  AxisPoint ray_point(const Located& at, Point2 q) const;

  /// Polygon edge whose induced cell holds q (reflex-vertex wedges belong to
  /// the edge leaving that vertex), or -1.
  int cell_of(Point2 q) const;

  std::size_t region_count() const { return regions_.size(); }

 private:
  struct Region {
    int arc;
    int side;
  };
  struct ArcGrid;

  AxisPoint ray_point_in(int arc, AxisSite site, Point2 q) const;
  void build_regions();
  void build_grid();

  Polygon poly_;
  std::vector<AxisNode> nodes_;
  std::vector<AxisArc> arcs_;
  std::vector<Region> regions_;
  PlanarLocator locator_;
  std::shared_ptr<const ArcGrid> grid_;
};

}  // namespace esq
