#pragma once

// Voronoi diagram of a point set, built as the dual of a gift-wrapped
// Delaunay triangulation, with one artificial vertex on every unbounded
// edge. Artificial MECs are larger than every Voronoi-vertex MEC and no two
// of them overlap inside the convex hull of the sites.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "esq/geometry.hpp"

namespace esq {

struct VoronoiVertex {
  Point2 pos;
  double radius = 0.0;
  bool artificial = false;
  std::array<int, 3> sites{-1, -1, -1};  // ccw Delaunay triangle (finite vertices)
  std::vector<int> edges;
};

struct VoronoiEdge {
  int a = -1;  // finite end
  int b = -1;  // other end (artificial for rays)
  std::array<int, 2> sites{-1, -1};
  bool unbounded = false;
  Point2 dir;  // unit direction of the ray, for unbounded edges

  int other(int v) const { return v == a ? b : a; }
};

class VoronoiDiagram {
 public:
  /// Throws DegenerateInput for fewer than 3 points, duplicates, all points
  /// collinear, four cocircular points or equal vertex radii; PlacementFailed
  /// if artificial vertices cannot be separated.
  static VoronoiDiagram build(std::span<const Point2> points);

  const std::vector<Point2>& sites() const { return sites_; }
  const std::vector<VoronoiVertex>& vertices() const { return vertices_; }
  const std::vector<VoronoiEdge>& edges() const { return edges_; }
  const VoronoiVertex& vertex(int i) const { return vertices_[i]; }
  const VoronoiEdge& edge(int i) const { return edges_[i]; }
  const Polygon& hull() const { return hull_; }
  std::size_t finite_count() const { return finite_; }

  /// Point at parameter t from a; rays extend past b for t > 1.
  Point2 point_on(int edge, double t) const;
  double radius_on(int edge, double t) const;

  /// Largest MEC centered on the edge containing q (rays: the whole half
  /// line from a), or nothing.
  std::optional<Circle> largest_containing(int edge, Point2 q) const;

  /// Pairs of artificial MECs overlapping inside the hull (should be none).
  std::vector<std::pair<int, int>> artificial_overlaps() const;

  /// Next step from vertex c toward vertex c2 along the Voronoi edge whose
  /// arc of MEC_c holds the crossing points of MEC_c and MEC_c2; -1 when the
  /// MECs do not cross.
  int next_step(int c, int c2) const;
  /// Iterates next_step from c until c2 is reached (at most vertices() steps).
  /// A path leaving along a ray re-enters through the other ray whose
  /// artificial MEC holds the lens; both artificial vertices appear in it.
  std::vector<int> unique_path(int c, int c2) const;

 private:
  bool caps_overlap(int u, int v) const;
  void place_artificial();

  std::vector<Point2> sites_;
  std::vector<VoronoiVertex> vertices_;
  std::vector<VoronoiEdge> edges_;
  Polygon hull_;
  std::size_t finite_ = 0;
};

}  // namespace esq
